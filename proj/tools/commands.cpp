#include "commands.hpp"

#include <cctype>
#include <optional>
#include <sstream>

#include "padicres/error.hpp"
#include "padicres/limits/limits.hpp"
#include "padicres/link/link.hpp"
#include "padicres/poly/parse.hpp"
#include "padicres/poly/uni_poly.hpp"
#include "padicres/resultant/cyclic.hpp"

namespace padicres::cli {

using nlohmann::ordered_json;
using resultant::CyclicMask;

std::size_t infer_num_vars(const std::string& text)
{
    std::size_t vars = 1;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] != 't' || (i > 0 && std::isalnum(static_cast<unsigned char>(text[i - 1]))))
            continue;
        std::size_t j = i + 1;
        std::size_t n = 0;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
            n = n * 10 + static_cast<std::size_t>(text[j++] - '0');
        vars = std::max(vars, n);
    }
    return vars;
}

std::vector<unsigned long> parse_levels(const std::string& text)
{
    std::vector<unsigned long> out;
    std::stringstream items(text);
    std::string item;
    while (std::getline(items, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoul(item, &used));
            if (used != item.size() || item[0] == '-')
                throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw ParseError("bad level '" + item + "' in '" + text + "'");
        }
    }
    if (out.empty())
        throw ParseError("empty level list");
    return out;
}

namespace {

// Refuses level vectors whose root-of-unity count exceeds the safety bound.
void check_budget(Prime p, unsigned long total_level)
{
    const unsigned long budget = limits::default_limit_options().level_budget;
    if (total_level > 64 || prime_power(p, total_level) > budget)
        throw BudgetError("p^" + std::to_string(total_level) + " roots of unity exceed the budget "
                          + std::to_string(budget) + " (set PADIC_RES_BUDGET to raise it)");
}

CyclicMask::Kind mask_kind(const std::string& name)
{
    if (name == "full" || name == "r")
        return CyclicMask::Kind::full;
    if (name == "rprime")
        return CyclicMask::Kind::rprime;
    if (name == "custom")
        return CyclicMask::Kind::custom;
    throw ParseError("unknown mask '" + name + "' (expected full, rprime or custom)");
}

std::vector<std::vector<unsigned long>> parse_indices(const std::string& text, std::size_t vars)
{
    std::vector<std::vector<unsigned long>> out;
    std::stringstream groups(text);
    std::string group;
    while (std::getline(groups, group, ';')) {
        std::vector<unsigned long> ids;
        std::stringstream items(group);
        std::string item;
        while (std::getline(items, item, ',')) {
            try {
                std::size_t used = 0;
                ids.push_back(std::stoul(item, &used));
                if (used != item.size())
                    throw std::invalid_argument(item);
            } catch (const std::exception&) {
                throw ParseError("bad mask index '" + item + "'");
            }
        }
        out.push_back(std::move(ids));
    }
    if (out.size() != vars)
        throw ParseError("custom mask needs " + std::to_string(vars) + " index groups separated by ';'");
    return out;
}

ordered_json levels_json(const std::vector<unsigned long>& levels)
{
    ordered_json a = ordered_json::array();
    for (auto n : levels)
        a.push_back(n);
    return a;
}

void estimate_fields(Report& r, const std::string& key, const limits::LimitEstimate& e)
{
    ordered_json j = ordered_json::object();
    j["value"] = r.padic(e.value);
    j["exact_zero"] = e.exact_zero;
    j["certified_digits"] = e.certified_digits == limits::unlimited_digits ? ordered_json("unlimited")
                                                                          : ordered_json(e.certified_digits);
    j["levels_used"] = levels_json(e.levels_used);
    j["stabilized"] = e.stabilized;
    r[key] = j;
}

} // namespace

Report cmd_res(const ResOptions& o, const CommonOptions& c)
{
    const Prime p(o.p);
    const auto levels = parse_levels(o.levels);
    unsigned long total = 0;
    for (auto n : levels)
        total += n;
    check_budget(p, total);
    const auto f = poly::parse_poly(o.poly, levels.size());
    const auto kind = mask_kind(o.mask);
    CyclicMask mask = kind == CyclicMask::Kind::full     ? CyclicMask::full()
                      : kind == CyclicMask::Kind::rprime ? CyclicMask::rprime()
                                                         : CyclicMask::custom(parse_indices(o.indices, levels.size()));
    const resultant::CyclicResultantRequest req{f, p, levels, mask};
    const Integer value = resultant::cyclic_resultant(req, {c.threads});

    Report r(c.truncate);
    r["poly"] = f.to_string();
    r["p"] = o.p;
    r["levels"] = levels_json(levels);
    r["mask"] = o.mask;
    r["value"] = r.integer(value);
    if (c.verify) {
        ordered_json v = ordered_json::object();
        try {
            const Integer b = resultant::cyclic_resultant_baseline(req);
            if (b != value)
                throw OracleMismatch("Sylvester baseline gives " + b.get_str());
            v["baseline"] = "agree";
        } catch (const BudgetError&) {
            v["baseline"] = "skipped";
        }
        const Integer z = resultant::root_product_oracle(req);
        if (z != value)
            throw OracleMismatch("root product oracle gives " + z.get_str());
        v["root_product"] = "agree";
        r["verify"] = v;
    }
    return r;
}

Report cmd_climit(const ClimitOptions& o, const CommonOptions& c)
{
    const Prime p(o.p);
    const std::size_t vars = o.vars ? o.vars : infer_num_vars(o.poly);
    const auto f = poly::parse_poly(o.poly, vars);
    const auto kind = mask_kind(o.mask);
    if (kind == CyclicMask::Kind::custom)
        throw ParseError("limits use the full or rprime mask");
    if (o.sequence != "raw" && o.sequence != "nonp")
        throw ParseError("unknown sequence '" + o.sequence + "' (expected raw or nonp)");
    auto options = limits::default_limit_options();
    options.threads = c.threads;
    const auto seq = o.sequence == "raw" ? limits::Sequence::raw : limits::Sequence::nonp;
    const auto e = limits::limit_estimate(f, p, o.K, kind, seq, options);

    Report r(c.truncate);
    r["poly"] = f.to_string();
    r["p"] = o.p;
    r["K"] = o.K;
    r["mask"] = o.mask;
    r["sequence"] = o.sequence;
    r["zero_limit"] = limits::zero_limit_predicate(f, p);
    estimate_fields(r, "limit", e);
    if (c.verify && o.sequence == "raw" && !e.exact_zero) {
        // The congruence certificate: one level higher agrees mod p^K.
        const auto higher = limits::limit_estimate(f, p, o.K + 1, kind, seq, options);
        if (higher.value.agreeing_digits(e.value) < o.K)
            throw OracleMismatch("levels " + std::to_string(o.K) + " and " + std::to_string(o.K + 1)
                                 + " disagree below p^K");
        r["verify"]["next_level"] = "agree";
    }
    return r;
}

Report cmd_iwasawa(const IwasawaOptions& o, const CommonOptions& c)
{
    const Prime p(o.p);
    if (infer_num_vars(o.poly) != 1)
        throw DomainError("Iwasawa invariants need a polynomial in one variable");
    check_budget(p, o.n_max);
    const auto f = poly::to_int_poly(poly::parse_poly(o.poly, 1));
    const auto fit = limits::iwasawa_fit(f, p, o.n_max);
    const auto structural = limits::lambda_mu_structural(f, p);

    Report r(c.truncate);
    r["poly"] = poly::to_string(f);
    r["p"] = o.p;
    r["lambda"] = fit.lambda;
    r["mu"] = fit.mu;
    r["nu"] = fit.nu;
    r["window"] = levels_json({fit.window_first, fit.window_last});
    r["exponents"] = levels_json(fit.exponents);
    r["structural"]["lambda"] = structural.lambda;
    r["structural"]["mu"] = structural.mu;
    r["structural"]["agree"] = structural.lambda == fit.lambda && structural.mu == fit.mu;
    return r;
}

Report cmd_linkh1(const LinkOptions& o, const CommonOptions& c)
{
    const Prime p(o.p);
    const auto link = link::load_link_spec_file(o.spec);
    Report r(c.truncate);
    r["link"] = link.name;
    r["p"] = o.p;
    if (!o.levels.empty()) {
        const auto levels = parse_levels(o.levels);
        unsigned long total = 0;
        for (auto n : levels)
            total += n;
        check_budget(p, total);
        const link::CoveringSpec cov{p, levels};
        const auto h = link::h1_order(link, cov, c.threads);
        r["levels"] = levels_json(levels);
        r["order"] = r.integer(h.order);
        r["nonp"] = r.integer(h.nonp_part);
        r["p_exponent"] = h.p_exponent;
        r["rational_homology_sphere"] = h.rational_homology_sphere();
        if (c.verify) {
            const auto oracle = link::character_oracle(link, cov);
            if (oracle.order != h.order)
                throw OracleMismatch("character sum gives " + oracle.order.get_str());
            r["verify"]["character_oracle"] = "agree";
        }
    }
    if (o.limit_digits > 0) {
        auto options = limits::default_limit_options();
        options.threads = c.threads;
        estimate_fields(r, "nonp_limit", link::h1_nonp_limit(link, p, o.limit_digits, options));
    }
    if (o.levels.empty() && o.limit_digits == 0)
        throw ParseError("give --levels, --limit or both");
    return r;
}

Report cmd_whitehead(const WhiteheadOptions& o, const CommonOptions& c)
{
    const Prime p(o.p);
    Report r(c.truncate);
    r["k"] = o.k;
    r["p"] = o.p;
    r["K"] = o.K;
    r["delta"] = link::whitehead_delta(o.k).to_string();

    std::optional<link::WhiteheadClosedForm> closed;
    try {
        closed = link::whitehead_closed_form(o.k, p, o.K, o.truncation);
    } catch (const DegenerateInput& e) {
        r["closed_form"] = "degenerate";
        r["reason"] = e.what();
        r.mark_degenerate();
    }
    if (closed) {
        r["closed_form"] = r.padic(closed->value);
        if (closed->achieved_digits != limits::unlimited_digits) {
            r["truncation_level"] = o.truncation;
            r["achieved_digits"] = closed->achieved_digits;
        }
    }
    if (closed) {
        auto options = limits::default_limit_options();
        options.threads = c.threads;
        const auto est = link::h1_nonp_limit(link::whitehead_link(o.k), p, o.K, options);
        estimate_fields(r, "empirical", est);
        const unsigned long digits = std::min(o.K, est.certified_digits);
        r["agree"] = closed->value.agreeing_digits(est.value) >= digits;
        r["compared_digits"] = digits;
    }
    if (o.two_part > 0) {
        ordered_json rows = ordered_json::array();
        for (const auto& row : link::two_part_exponent_check(o.k, o.two_part)) {
            ordered_json j = ordered_json::object();
            j["n"] = row.n;
            j["exact"] = row.exact;
            j["nu_sum"] = row.nu_sum.get_str();
            j["predicted"] = row.predicted.get_str();
            j["holds"] = row.holds;
            rows.push_back(j);
        }
        r["two_part"] = rows;
    }
    return r;
}

} // namespace padicres::cli
