#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "padicres/error.hpp"

using namespace padicres;
using namespace padicres::cli;

namespace {

enum Exit : int { ok = 0, domain = 1, usage = 2, budget = 3, mismatch = 4, precision = 5, degenerate = 6 };

int fail(int code, const std::string& kind, const std::string& what)
{
    std::cerr << "padicres: " << kind << ": " << what << '\n';
    return code;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Iterated p-power cyclic resultants, their p-adic limits and branched-cover homology"};
    app.require_subcommand(1);
    app.fallthrough();

    CommonOptions common;
    std::string format = "table";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "json"}));
    app.add_option("--threads", common.threads, "Worker threads")->check(CLI::Range(1u, 256u));
    app.add_option("--truncate", common.truncate, "Shorten integers longer than this many digits (0 = never)");
    app.add_flag("--verify", common.verify, "Cross-check against the independent oracles");

    ResOptions res;
    auto* cmd_r = app.add_subcommand("res", "Masked iterated cyclic resultant");
    cmd_r->add_option("poly", res.poly, "Polynomial in t1..td")->required();
    cmd_r->add_option("-p,--prime", res.p, "Prime")->required();
    cmd_r->add_option("-n,--levels", res.levels, "Levels n1,...,nd")->required();
    cmd_r->add_option("--mask", res.mask, "full, rprime or custom");
    cmd_r->add_option("--indices", res.indices, "Custom mask index sets, e.g. \"0,1;1\"");

    ClimitOptions climit;
    auto* cmd_c = app.add_subcommand("climit", "p-adic limit of the diagonal resultants");
    cmd_c->add_option("poly", climit.poly, "Polynomial in t1..td")->required();
    cmd_c->add_option("-p,--prime", climit.p, "Prime")->required();
    cmd_c->add_option("-K,--digits", climit.K, "p-adic digits")->check(CLI::PositiveNumber);
    cmd_c->add_option("-d,--vars", climit.vars, "Number of variables (default: largest tN)");
    cmd_c->add_option("--mask", climit.mask, "full or rprime");
    cmd_c->add_option("--sequence", climit.sequence, "raw or nonp");

    IwasawaOptions iwasawa;
    auto* cmd_i = app.add_subcommand("iwasawa", "Iwasawa invariants of Res(t^{p^n} - 1, f)");
    cmd_i->add_option("poly", iwasawa.poly, "Polynomial in t")->required();
    cmd_i->add_option("-p,--prime", iwasawa.p, "Prime")->required();
    cmd_i->add_option("--nmax", iwasawa.n_max, "Largest level");

    LinkOptions linkh1;
    auto* cmd_l = app.add_subcommand("linkh1", "Homology of branched Z_p^d covers of a link");
    cmd_l->add_option("--spec", linkh1.spec, "Link spec JSON file")->required();
    cmd_l->add_option("-p,--prime", linkh1.p, "Prime")->required();
    cmd_l->add_option("-n,--levels", linkh1.levels, "Levels n1,...,nd");
    cmd_l->add_option("--limit", linkh1.limit_digits, "Also estimate the non-p limit to this many digits");

    WhiteheadOptions whitehead;
    auto* cmd_w = app.add_subcommand("whitehead", "Closed-form non-p limit for the k-twisted Whitehead link");
    cmd_w->add_option("-k", whitehead.k, "Twist count")->required();
    cmd_w->add_option("-p,--prime", whitehead.p, "Prime")->required();
    cmd_w->add_option("-K,--digits", whitehead.K, "p-adic digits")->check(CLI::PositiveNumber);
    cmd_w->add_option("--truncation", whitehead.truncation, "Cyclotomic truncation level for p = 2");
    cmd_w->add_option("--two-part", whitehead.two_part, "Check the 2-part exponent formula up to this level");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? Exit::ok : Exit::usage;
    }
    common.format = format == "json" ? Format::json : Format::table;

    try {
        Report report;
        if (cmd_r->parsed())
            report = cmd_res(res, common);
        else if (cmd_c->parsed())
            report = cmd_climit(climit, common);
        else if (cmd_i->parsed())
            report = cmd_iwasawa(iwasawa, common);
        else if (cmd_l->parsed())
            report = cmd_linkh1(linkh1, common);
        else
            report = cmd_whitehead(whitehead, common);
        report.print(std::cout, common.format);
        if (report.degenerate())
            return Exit::degenerate;
    } catch (const ParseError& e) {
        return fail(Exit::usage, "parse error", e.what());
    } catch (const DegenerateInput& e) {
        return fail(Exit::degenerate, "degenerate input", e.what());
    } catch (const DomainError& e) {
        return fail(Exit::domain, "domain error", e.what());
    } catch (const BudgetError& e) {
        return fail(Exit::budget, "budget exceeded", e.what());
    } catch (const OracleMismatch& e) {
        return fail(Exit::mismatch, "oracle mismatch (bug)", e.what());
    } catch (const PrecisionError& e) {
        return fail(Exit::precision, "precision exhausted", e.what());
    }
    return Exit::ok;
}
