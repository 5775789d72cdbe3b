#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "frb/equidistribution.hpp"
#include "frb/json_io.hpp"

namespace {

using namespace frb;

constexpr const char* kCsvSchema = "# frb csv schema v1";

struct NRange {
    long lo = 0, hi = 0;
};

NRange parse_range(const std::string& text) {
    NRange out;
    std::size_t dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            out.lo = out.hi = std::stol(text);
        } else {
            out.lo = std::stol(text.substr(0, dots));
            out.hi = std::stol(text.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw std::invalid_argument("bad n-range: " + text);
    }
    if (out.lo > out.hi) throw std::invalid_argument("empty n-range: " + text);
    return out;
}

VertexFunction parse_vertex_function(const std::string& text, int rank) {
    if (text.rfind("chi:", 0) == 0) return VertexFunction::chi(Word::parse(text.substr(4), rank));
    if (text.rfind("const:", 0) == 0) return VertexFunction::constant(parse_rational(text.substr(6)));
    if (text.rfind("table:", 0) == 0) return read_table_file(text.substr(6), rank);
    throw std::invalid_argument("unknown vertex function descriptor: " + text +
                                " (use chi:WORD, const:RATIONAL, table:FILE)");
}

StepFunction parse_step_function(const std::string& text, const BoundaryContext& ctx) {
    if (text == "one") return StepFunction::constant(ctx, QuadExt(1));
    if (text.rfind("cyl:", 0) == 0)
        return StepFunction::indicator(ctx, Word::parse(text.substr(4), ctx.rank));
    if (text.rfind("step:", 0) == 0) {
        StepFunction f = read_step_file(text.substr(5));
        if (f.rank() != ctx.rank) throw std::invalid_argument("step file rank mismatch");
        return f;
    }
    throw std::invalid_argument("unknown step function descriptor: " + text +
                                " (use one, cyl:WORD, step:FILE)");
}

void emit_value(const std::string& format, const std::string& name, const QuadExt& v) {
    if (format == "json") {
        nlohmann::json j = quadext_json(v);
        j["name"] = name;
        j["exact"] = v.str();
        std::cout << j.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << kCsvSchema << "\nname,exact,float\n"
                  << name << "," << v.str() << "," << v.to_double() << "\n";
    } else {
        std::cout << name << " = " << v.str() << "  (" << v.to_double() << ")\n";
    }
}

void emit_rational(const std::string& format, const std::string& name, const Rational& v) {
    emit_value(format, name, QuadExt(v));
}

int cmd_verify_all(const VerifyOptions& opt, const std::string& format) {
    std::vector<CheckResult> results = run_all_checks(opt);
    int failed = 0;
    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const CheckResult& c : results) arr.push_back(check_json(c));
        std::cout << arr.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << kCsvSchema << "\ncheck,ref,status,exact,float,tolerance,seconds\n";
        for (const CheckResult& c : results)
            std::cout << c.number << "," << c.id << "," << (c.pass ? "pass" : "fail") << ",\""
                      << c.exact << "\"," << c.value << ",\"" << c.tolerance << "\"," << c.seconds
                      << "\n";
    } else {
        for (const CheckResult& c : results) {
            std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.number << " " << c.id << "  ("
                      << c.seconds << " s)\n";
            std::cout << "       claim: " << c.claim << "\n";
            if (!c.exact.empty()) std::cout << "       exact: " << c.exact << "\n";
            std::cout << "       " << c.detail << "\n";
        }
    }
    for (const CheckResult& c : results)
        if (!c.pass) ++failed;
    if (failed > 0 && format == "table")
        std::cout << failed << " of " << results.size() << " checks failed\n";
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact boundary representation toolkit for free groups"};
    app.require_subcommand(1);
    std::string format = "table";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"table", "csv", "json"}))
        ->capture_default_str();
    long width = 0;
    app.add_option("--width", width, "parallelism width (default: FRB_PARALLEL or hardware)");
    std::uint64_t cap = 1ull << 27;
    app.add_option("--cap", cap, "enumeration cap guarding memory/time")->capture_default_str();

    int rank = 2;
    // count
    auto* c_count = app.add_subcommand("count", "sphere and constrained word counts");
    long count_n = 0;
    std::string avoid_first, avoid_last, pre_u, suf_v;
    c_count->add_option("--rank", rank, "free group rank")->required();
    c_count->add_option("--n", count_n, "word length")->required();
    c_count->add_option("--avoid-first", avoid_first, "exclude words starting with this letter");
    c_count->add_option("--avoid-last", avoid_last, "exclude words ending with this letter");
    c_count->add_option("--prefix", pre_u, "count words with this prefix");
    c_count->add_option("--suffix", suf_v, "count words ending with the inverse of this word");

    // measure
    auto* c_measure = app.add_subcommand("measure", "visual measure of cylinders and translates");
    std::string cyl_text, translate_text;
    c_measure->add_option("--rank", rank)->required();
    c_measure->add_option("--cyl", cyl_text, "cylinder base word")->required();
    c_measure->add_option("--translate", translate_text, "group element acting on the cylinder");

    // xi
    auto* c_xi = app.add_subcommand("xi", "Harish-Chandra function at radius n");
    long xi_n = 0;
    bool xi_integral = false;
    c_xi->add_option("--rank", rank)->required();
    c_xi->add_option("--n", xi_n)->required();
    c_xi->add_flag("--integral", xi_integral, "also integrate over a radius-n word and compare");

    // coeff
    auto* c_coeff = app.add_subcommand("coeff", "matrix coefficient <pi(gamma)1_B, 1_{B_u}>");
    std::string gamma_text, u_text;
    c_coeff->add_option("--rank", rank)->required();
    c_coeff->add_option("--gamma", gamma_text)->required();
    c_coeff->add_option("--u", u_text, "cylinder base word (default: identity)");

    // fn-check
    auto* c_fn = app.add_subcommand("fn-check", "verify M_n(1) fixes 1_B cylinder by cylinder");
    long fn_n = 0;
    c_fn->add_option("--rank", rank)->required();
    c_fn->add_option("--n", fn_n)->required();

    // mn-coeff
    auto* c_mn = app.add_subcommand("mn-coeff", "averaged matrix coefficients over an n-range");
    std::string mn_f = "chi:a", mn_g = "one", mn_h = "one", mn_range = "2..8", mn_mode = "auto";
    c_mn->set_help_flag("--help", "print help");
    c_mn->add_option("--rank", rank)->required();
    c_mn->add_option("--f", mn_f, "vertex function (chi:WORD|const:RATIONAL|table:FILE)");
    c_mn->add_option("--g", mn_g, "step function (one|cyl:WORD|step:FILE)");
    c_mn->add_option("--h", mn_h, "step function (one|cyl:WORD|step:FILE)");
    c_mn->add_option("--n", mn_range, "n range, e.g. 2..12");
    c_mn->add_option("--mode", mn_mode)->check(CLI::IsMember({"auto", "fast", "enum"}));

    // norm
    auto* c_norm = app.add_subcommand("norm", "operator norm of the compressed average");
    long norm_n = 0, norm_d = 0;
    c_norm->add_option("--rank", rank)->required();
    c_norm->add_option("--n", norm_n)->required();
    c_norm->add_option("--depth", norm_d)->required();

    // cyclicity
    auto* c_cyc = app.add_subcommand("cyclicity", "rank of projected translates of 1_B");
    long cyc_nmax = 0, cyc_d = 0;
    c_cyc->add_option("--rank", rank)->required();
    c_cyc->add_option("--nmax", cyc_nmax)->required();
    c_cyc->add_option("--depth", cyc_d)->required();

    // equidist
    auto* c_eq = app.add_subcommand("equidist", "sphere pair sums over an n-range");
    std::string eq_f = "chi:a", eq_g = "chi:a", eq_range = "2..14";
    bool cumulative = false;
    c_eq->add_option("--rank", rank)->required();
    c_eq->add_option("--f", eq_f, "vertex function");
    c_eq->add_option("--g", eq_g, "vertex function");
    c_eq->add_option("--n", eq_range, "n range, e.g. 2..14");
    c_eq->add_flag("--cumulative", cumulative, "cumulative ball sums normalized by q^n");

    // verify-all
    auto* c_verify = app.add_subcommand("verify-all", "run the full acceptance suite");
    bool quick = false;
    int verify_rank = 0;
    c_verify->add_flag("--quick", quick, "reduced ranges for a fast pass");
    c_verify->add_option("--rank", verify_rank, "restrict to one rank (default: all)");

    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (width > 0) setenv("FRB_PARALLEL", std::to_string(width).c_str(), 1);

    try {
        if (*c_count) {
            if (!pre_u.empty() || !suf_v.empty()) {
                if (pre_u.empty() || suf_v.empty())
                    throw std::invalid_argument("--prefix and --suffix go together");
                Word u = Word::parse(pre_u, rank), v = Word::parse(suf_v, rank);
                emit_rational(format, "count_prefix_suffix",
                              Rational(count_prefix_suffix(rank, count_n, u, v)));
            } else if (!avoid_first.empty() || !avoid_last.empty()) {
                Letter s = avoid_first.empty() ? Letter(0) : Word::parse(avoid_first, rank)[0];
                Letter t = avoid_last.empty() ? Letter(0) : Word::parse(avoid_last, rank)[0];
                emit_rational(format, "count_avoiding",
                              Rational(count_avoiding(rank, count_n, s, t)));
            } else {
                emit_rational(format, "sphere_count", Rational(sphere_count(rank, count_n)));
            }
        } else if (*c_measure) {
            BoundaryContext ctx(rank);
            Word u = Word::parse(cyl_text, rank);
            if (translate_text.empty()) {
                emit_rational(format, "measure", cylinder_measure(ctx, u));
            } else {
                Word gamma = Word::parse(translate_text, rank);
                emit_rational(format, "measure",
                              measure_of_union(ctx, translate_cylinder(ctx, gamma, u)));
            }
        } else if (*c_xi) {
            BoundaryContext ctx(rank);
            QuadExt closed = harish_chandra_closed(ctx, xi_n);
            emit_value(format, "xi", closed);
            if (xi_integral && xi_n >= 0) {
                Word gamma = sphere_word(rank, xi_n, 0);
                QuadExt integral = harish_chandra_integral(ctx, gamma);
                std::cout << (integral == closed ? "integral matches the closed form\n"
                                                 : "integral DISAGREES with the closed form\n");
                if (!(integral == closed)) return 1;
            }
        } else if (*c_coeff) {
            BoundaryContext ctx(rank);
            Word gamma = Word::parse(gamma_text, rank);
            Word u = u_text.empty() ? Word() : Word::parse(u_text, rank);
            emit_value(format, "coeff", coeff_cylinder(ctx, gamma, u));
        } else if (*c_fn) {
            BoundaryContext ctx(rank);
            if (sphere_count_u64(rank, fn_n, cap) > cap)
                throw resource_cap_error("fn-check sphere exceeds --cap");
            StepFunction out = m_n_apply(ctx, VertexFunction::constant(1), fn_n,
                                         StepFunction::constant(ctx, QuadExt(1)));
            bool ok = true;
            for (std::size_t i = 0; i < out.size(); ++i)
                if (!(out.value_at_index(i) == QuadExt(1))) ok = false;
            std::cout << (ok ? "PASS" : "FAIL") << ": M_" << fn_n
                      << "(1) applied to 1_B is the constant 1 on all "
                      << out.size() << " cylinders\n";
            if (!ok) return 1;
        } else if (*c_mn) {
            BoundaryContext ctx(rank);
            NRange nr = parse_range(mn_range);
            VertexFunction f = parse_vertex_function(mn_f, rank);
            StepFunction g = parse_step_function(mn_g, ctx);
            StepFunction h = parse_step_function(mn_h, ctx);
            MnMode mode = mn_mode == "fast" ? MnMode::kFast
                                            : mn_mode == "enum" ? MnMode::kEnumerated : MnMode::kAuto;
            if (mode == MnMode::kEnumerated)
                for (long n = nr.lo; n <= nr.hi; ++n)
                    if (sphere_count_u64(rank, n, cap) > cap)
                        throw resource_cap_error("mn-coeff enumeration exceeds --cap");
            QuadExt limit = limit_coeff(ctx, f, g, h);
            nlohmann::json rows = nlohmann::json::array();
            if (format == "csv") std::cout << kCsvSchema << "\nn,exact_a,exact_b,float,deviation\n";
            for (long n = nr.lo; n <= nr.hi; ++n) {
                QuadExt v = m_n_coeff(ctx, f, n, g, h, mode);
                double dev = std::abs((v - limit).to_double());
                if (format == "csv") {
                    std::cout << n << "," << v.a.get_str() << "," << v.b.get_str() << ","
                              << v.to_double() << "," << dev << "\n";
                } else if (format == "json") {
                    nlohmann::json j = quadext_json(v);
                    j["n"] = n;
                    j["deviation"] = dev;
                    rows.push_back(j);
                } else {
                    std::cout << "n=" << n << "  " << v.str() << "  (" << v.to_double()
                              << ", deviation " << dev << ")\n";
                }
            }
            if (format == "json") {
                nlohmann::json out{{"rows", rows}, {"limit", limit.str()},
                                   {"limit_float", limit.to_double()}};
                std::cout << out.dump(2) << "\n";
            } else if (format == "csv") {
                std::cout << "# limit = " << limit.str() << " (" << limit.to_double() << ")\n";
            } else {
                std::cout << "limit = " << limit.str() << "  (" << limit.to_double() << ")\n";
            }
        } else if (*c_norm) {
            BoundaryContext ctx(rank);
            double norm = compression_norm(ctx, norm_n, norm_d);
            if (format == "json") {
                std::cout << nlohmann::json{{"n", norm_n}, {"depth", norm_d}, {"norm", norm}}
                                 .dump(2)
                          << "\n";
            } else {
                std::cout << "norm = " << norm << "  (|norm - 1| = " << std::abs(norm - 1.0)
                          << ")\n";
            }
        } else if (*c_cyc) {
            BoundaryContext ctx(rank);
            long value = cyclicity_rank(ctx, cyc_nmax, cyc_d);
            emit_rational(format, "cyclicity_rank", Rational(value));
        } else if (*c_eq) {
            BoundaryContext ctx(rank);
            NRange nr = parse_range(eq_range);
            VertexFunction f = parse_vertex_function(eq_f, rank);
            VertexFunction g = parse_vertex_function(eq_g, rank);
            std::vector<PairSumReport> rows = equidist_report(ctx, f, g, nr.lo, nr.hi, cumulative);
            Rational limit = cumulative ? cumulative_limit(ctx, f, g) : pair_limit(ctx, f, g);
            if (format == "csv") {
                std::cout << kCsvSchema << "\nn,value_num,value_den,float,deviation,class\n";
                for (const PairSumReport& row : rows)
                    std::cout << row.n << "," << row.value.get_num().get_str() << ","
                              << row.value.get_den().get_str() << "," << to_double(row.value) << ","
                              << row.deviation << "," << row.cls << "\n";
                std::cout << "# limit = " << limit.get_str() << "\n";
            } else if (format == "json") {
                nlohmann::json arr = nlohmann::json::array();
                for (const PairSumReport& row : rows)
                    arr.push_back(nlohmann::json{{"n", row.n},
                                                 {"value", row.value.get_str()},
                                                 {"float", to_double(row.value)},
                                                 {"deviation", row.deviation},
                                                 {"class", row.cls}});
                std::cout << nlohmann::json{{"rows", arr}, {"limit", limit.get_str()}}.dump(2)
                          << "\n";
            } else {
                for (const PairSumReport& row : rows)
                    std::cout << "n=" << row.n << "  " << row.value.get_str() << "  ("
                              << to_double(row.value) << ", deviation " << row.deviation
                              << ", class " << row.cls << ")\n";
                std::cout << "limit = " << limit.get_str() << "\n";
            }
        } else if (*c_verify) {
            VerifyOptions opt;
            opt.quick = quick;
            opt.rank_filter = verify_rank;
            return cmd_verify_all(opt, format);
        }
    } catch (const resource_cap_error& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
