#include "ozeta/render.hpp"

namespace ozeta {

std::optional<Format> parse_format(const std::string& s) {
    if (s == "text") return Format::Text;
    if (s == "latex") return Format::Latex;
    if (s == "json") return Format::Json;
    return std::nullopt;
}

nlohmann::json json_int(const mpz_class& v) {
    if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
    return v.get_str();
}

nlohmann::json to_json(const QPoly& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (long i = 0; i <= p.degree(); ++i) arr.push_back(json_int(p.coeff(i)));
    if (arr.empty()) arr.push_back(0);  // zero polynomial as [0]
    return arr;
}

nlohmann::json to_json(const XPoly& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (long i = 0; i <= p.degree(); ++i) arr.push_back(to_json(p.coeff(i)));
    if (arr.empty()) arr.push_back(to_json(QPoly()));
    return arr;
}

nlohmann::json to_json(const CoeffSeries& s) {
    nlohmann::json arr = nlohmann::json::array();
    for (const QPoly& c : s.a) arr.push_back(to_json(c));
    return arr;
}

nlohmann::json to_json(const std::vector<mpz_class>& v) {
    nlohmann::json arr = nlohmann::json::array();
    for (const mpz_class& x : v) arr.push_back(json_int(x));
    return arr;
}

std::string series_text(const CoeffSeries& s) {
    std::string out = "[";
    for (size_t i = 0; i < s.a.size(); ++i) {
        if (i) out += ", ";
        out += s.a[i].str();
    }
    return out + "]";
}

std::string ints_text(const std::vector<mpz_class>& v) {
    std::string out = "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += v[i].get_str();
    }
    return out + "]";
}

}  // namespace ozeta
