#include "report.hpp"

#include <algorithm>

namespace padicres::cli {

using nlohmann::ordered_json;

std::string Report::integer(const Integer& x)
{
    std::string s = x.get_str();
    const std::size_t sign = s[0] == '-' ? 1 : 0;
    const std::size_t digits = s.size() - sign;
    if (truncate_ == 0 || digits <= truncate_)
        return s;
    canonical_ = false;
    const std::size_t head = std::max<std::size_t>(1, truncate_ / 2);
    const std::size_t tail = std::max<std::size_t>(1, truncate_ - head);
    return s.substr(0, sign + head) + "..." + s.substr(s.size() - tail) + " (" + std::to_string(digits) + " digits)";
}

ordered_json Report::padic(const padic::PadicApprox& x)
{
    ordered_json j = ordered_json::object();
    j["residue"] = integer(x.residue());
    j["modulus"] = std::to_string(x.prime().value()) + "^" + std::to_string(x.precision());
    return j;
}

namespace {

std::string scalar(const ordered_json& v)
{
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_array()) {
        if (v.empty())
            return "-";
        std::string out;
        for (const auto& e : v)
            out += (out.empty() ? "" : ",") + scalar(e);
        return out;
    }
    return v.dump();
}

void flatten(const ordered_json& obj, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows)
{
    for (const auto& [k, v] : obj.items()) {
        const std::string key = prefix.empty() ? k : prefix + "." + k;
        if (v.is_object() && v.contains("residue") && v.contains("modulus") && v.size() == 2)
            rows.emplace_back(key, v["residue"].get<std::string>() + " mod " + v["modulus"].get<std::string>());
        else if (v.is_object())
            flatten(v, key, rows);
        else if (v.is_array() && !v.empty() && v.front().is_object()) {
            for (std::size_t i = 0; i < v.size(); ++i)
                flatten(v[i], key + "[" + std::to_string(i) + "]", rows);
        } else
            rows.emplace_back(key, scalar(v));
    }
}

} // namespace

void Report::print(std::ostream& out, Format format) const
{
    ordered_json doc = doc_;
    if (!canonical_)
        doc["canonical"] = false;
    if (format == Format::json) {
        out << doc.dump(2) << '\n';
        return;
    }
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(doc, "", rows);
    std::size_t width = 0;
    for (const auto& r : rows)
        width = std::max(width, r.first.size());
    for (const auto& [k, v] : rows)
        out << k << std::string(width - k.size() + 2, ' ') << v << '\n';
}

} // namespace padicres::cli
