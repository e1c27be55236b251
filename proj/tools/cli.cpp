#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "bruhat/class_enum.hpp"
#include "bruhat/coincidence.hpp"
#include "bruhat/json_io.hpp"
#include "bruhat/matrix.hpp"
#include "bruhat/orders.hpp"
#include "bruhat/partition.hpp"

namespace bruhat {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitTooLarge = 3;

std::vector<int> parse_margins(const std::string& text) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        int v = 0;
        const char* first = text.data() + pos;
        const char* last = text.data() + comma;
        auto [p, ec] = std::from_chars(first, last, v);
        if (ec != std::errc() || p != last)
            throw CLI::ValidationError("margins must be comma-separated integers, got '" + text +
                                       "'");
        out.push_back(v);
        pos = comma + 1;
        if (comma == text.size()) break;
    }
    return out;
}

BinaryMatrix read_matrix_input(const std::string& path) {
    std::string content;
    if (path == "-") {
        content.assign(std::istreambuf_iterator<char>(std::cin),
                       std::istreambuf_iterator<char>());
    } else {
        std::ifstream f(path);
        if (!f) throw std::invalid_argument("cannot open '" + path + "'");
        std::ostringstream buf;
        buf << f.rdbuf();
        content = buf.str();
    }
    for (char ch : content) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        if (ch == '{') return matrix_from_json(nlohmann::json::parse(content));
        break;
    }
    return BinaryMatrix::from_text(content);
}

ClassSpec spec_from_flags(int n, int k, const std::string& r_text, const std::string& s_text) {
    const bool have_nk = n >= 0;
    const bool have_rs = !r_text.empty() || !s_text.empty();
    if (have_nk == have_rs)
        throw CLI::ValidationError("give either -n/-k or -R/-S (not both)");
    if (have_nk) return ClassSpec::from_nk(n, k);
    if (r_text.empty() || s_text.empty())
        throw CLI::ValidationError("-R and -S must be given together");
    return ClassSpec::from_margins(parse_margins(r_text), parse_margins(s_text));
}

const char* reach_name(Reach r) {
    switch (r) {
        case Reach::yes: return "yes";
        case Reach::no: return "no";
        default: return "exhausted";
    }
}

void print_theorem_table(std::ostream& out, const std::vector<TheoremCell>& cells) {
    out << std::setw(3) << "n" << std::setw(4) << "k" << "  " << std::left << std::setw(9)
        << "expected" << std::setw(10) << "observed" << std::setw(12) << "method" << std::right
        << std::setw(8) << "size" << "  status\n";
    for (const auto& cell : cells) {
        out << std::setw(3) << cell.n << std::setw(4) << cell.k << "  " << std::left
            << std::setw(9) << (cell.expected_coincide ? "coincide" : "differ") << std::setw(10)
            << (cell.observed == CellObserved::coincide  ? "coincide"
                : cell.observed == CellObserved::differ ? "differ"
                                                        : "unchecked")
            << std::setw(12)
            << (cell.method == CellMethod::exhaustive    ? "exhaustive"
                : cell.method == CellMethod::certificate ? "certificate"
                                                         : "asserted")
            << std::right << std::setw(8);
        if (cell.class_size > 0)
            out << cell.class_size;
        else
            out << "-";
        if (cell.method == CellMethod::asserted)
            out << "  -";
        else
            out << (cell.ok ? "  ok" : "  FAIL");
        out << "\n";
    }
}

void print_lemma_report(std::ostream& out, const LemmaFamilyReport& rep) {
    out << "k=" << rep.k << " m=" << rep.m << "\n";
    out << "R   = " << rep.margin.to_string() << "\n";
    out << "R*  = " << rep.conjugate_margin.to_string() << "\n";
    out << "prefix diffs (s=1.." << rep.k - 1 << "):";
    for (long long d : rep.prefix_diffs) out << " " << d;
    out << "\n";
    out << "R strictly below R* in dominance: " << (rep.strictly_below ? "yes" : "no") << "\n";
    out << "closed forms: s=" << rep.k - 3 << ": " << rep.diff_at_k3 << "="
        << rep.expected_k3 << (rep.diff_at_k3 == rep.expected_k3 ? " ok" : " MISMATCH")
        << "; s=" << rep.k - 2 << ": " << rep.diff_at_k2 << "=" << rep.expected_k2
        << (rep.diff_at_k2 == rep.expected_k2 ? " ok" : " MISMATCH") << "; s=" << rep.k - 1
        << ": " << rep.diff_at_k1 << "=" << rep.expected_k1
        << (rep.diff_at_k1 == rep.expected_k1 ? " ok" : " MISMATCH") << "\n";
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bruhat and secondary Bruhat orders on classes A(R,S) of (0,1)-matrices"};
    app.require_subcommand(1);

    int threads = 1;
    unsigned long long seed = 0;  // reserved
    app.add_option("--threads", threads, "worker threads for verify-theorem")
        ->capture_default_str();
    app.add_option("--seed", seed, "random seed (reserved, unused by the core)");

    // feasible
    auto* sc_feasible = app.add_subcommand("feasible", "Gale-Ryser nonemptiness of A(R,S)");
    std::string f_r, f_s;
    sc_feasible->add_option("-R", f_r, "row sums, comma-separated")->required();
    sc_feasible->add_option("-S", f_s, "column sums, comma-separated")->required();

    // enumerate
    auto* sc_enum = app.add_subcommand("enumerate", "enumerate A(R,S) in canonical order");
    int e_n = -1, e_k = 0;
    std::string e_r, e_s;
    bool e_count = false, e_list = false;
    std::size_t e_cap = kDefaultEnumCap;
    sc_enum->add_option("-n", e_n, "matrix order for A(n,k)");
    sc_enum->add_option("-k", e_k, "constant margin for A(n,k)");
    sc_enum->add_option("-R", e_r, "row sums, comma-separated");
    sc_enum->add_option("-S", e_s, "column sums, comma-separated");
    auto* e_count_flag = sc_enum->add_flag("--count", e_count, "print the member count only");
    sc_enum->add_flag("--list", e_list, "print members, blank-line separated")
        ->excludes(e_count_flag);
    sc_enum->add_option("--cap", e_cap, "enumeration cap")->capture_default_str();

    // witness
    auto* sc_witness = app.add_subcommand("witness", "a member of A(R,S) in canonical text form");
    std::string w_r, w_s;
    sc_witness->add_option("-R", w_r, "row sums, comma-separated")->required();
    sc_witness->add_option("-S", w_s, "column sums, comma-separated")->required();

    // compare
    auto* sc_compare = app.add_subcommand("compare", "order relations between two matrices");
    std::string c_a, c_b, c_order = "both", c_format = "text";
    std::size_t c_budget = kDefaultBfsBudget;
    sc_compare->add_option("--a", c_a, "first matrix file ('-' for stdin)")->required();
    sc_compare->add_option("--b", c_b, "second matrix file")->required();
    sc_compare->add_option("--order", c_order, "bruhat|secondary|both")
        ->check(CLI::IsMember({"bruhat", "secondary", "both"}))
        ->capture_default_str();
    sc_compare->add_option("--budget", c_budget, "BFS budget for the secondary order")
        ->capture_default_str();
    sc_compare->add_option("--format", c_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    // hasse
    auto* sc_hasse = app.add_subcommand("hasse", "Hasse diagram of a class");
    int h_n = -1, h_k = 0;
    std::string h_r, h_s, h_order = "bruhat", h_format = "dot";
    std::size_t h_cap = kDefaultPairwiseCap;
    sc_hasse->add_option("-n", h_n, "matrix order for A(n,k)");
    sc_hasse->add_option("-k", h_k, "constant margin for A(n,k)");
    sc_hasse->add_option("-R", h_r, "row sums, comma-separated");
    sc_hasse->add_option("-S", h_s, "column sums, comma-separated");
    sc_hasse->add_option("--order", h_order, "bruhat|secondary")
        ->check(CLI::IsMember({"bruhat", "secondary"}))
        ->capture_default_str();
    sc_hasse->add_option("--format", h_format, "dot|json")
        ->check(CLI::IsMember({"dot", "json"}))
        ->capture_default_str();
    sc_hasse->add_option("--cap", h_cap, "class size cap")->capture_default_str();

    // coincide
    auto* sc_coincide = app.add_subcommand("coincide", "do the two orders agree on a class?");
    int o_n = -1, o_k = 0;
    std::string o_r, o_s, o_format = "text";
    std::size_t o_cap = kDefaultPairwiseCap;
    sc_coincide->add_option("-n", o_n, "matrix order for A(n,k)");
    sc_coincide->add_option("-k", o_k, "constant margin for A(n,k)");
    sc_coincide->add_option("-R", o_r, "row sums, comma-separated");
    sc_coincide->add_option("-S", o_s, "column sums, comma-separated");
    sc_coincide->add_option("--cap", o_cap, "class size cap")->capture_default_str();
    sc_coincide->add_option("--format", o_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    // counterexample
    auto* sc_cex = app.add_subcommand("counterexample",
                                      "certificate that the orders differ on A(n,k)");
    int x_n = 0, x_k = 0;
    bool x_verify = false;
    sc_cex->add_option("-n", x_n, "matrix order")->required();
    sc_cex->add_option("-k", x_k, "constant margin")->required();
    sc_cex->add_flag("--verify", x_verify, "re-verify and embed the report");

    // verify-theorem
    auto* sc_thm = app.add_subcommand("verify-theorem",
                                      "classification table over all (n,k) up to a bound");
    int t_max_n = 0;
    std::string t_format = "text";
    std::size_t t_cap = kDefaultPairwiseCap;
    sc_thm->add_option("--max-n", t_max_n, "largest matrix order")->required();
    sc_thm->add_option("--cap", t_cap, "class size cap for exhaustive cells")
        ->capture_default_str();
    sc_thm->add_option("--format", t_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    // lemma-family
    auto* sc_lemma = app.add_subcommand("lemma-family",
                                        "dominance report for the special margin family");
    int l_k = 0, l_m = 0;
    std::string l_format = "text";
    sc_lemma->add_option("-k", l_k, "part size parameter, k >= 5")->required();
    sc_lemma->add_option("-m", l_m, "length parameter, m in {k, k+1, k+2}")->required();
    sc_lemma->add_option("--format", l_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(sc_feasible)) {
            const bool ok = gale_ryser_feasible(parse_margins(f_r), parse_margins(f_s));
            out << (ok ? "feasible" : "infeasible") << "\n";
            return ok ? kExitOk : kExitNegative;
        }

        if (app.got_subcommand(sc_enum)) {
            const ClassSpec spec = spec_from_flags(e_n, e_k, e_r, e_s);
            if (e_list) {
                std::size_t emitted = 0;
                bool over = false;
                for_each_member(spec, [&](const BinaryMatrix& a) {
                    if (emitted >= e_cap) {
                        over = true;
                        return false;
                    }
                    if (emitted) out << "\n";
                    out << a.to_text();
                    ++emitted;
                    return true;
                });
                if (over) {
                    err << "class too large (cap " << e_cap << ")\n";
                    return kExitTooLarge;
                }
            } else {
                out << count(spec, e_cap) << "\n";
            }
            return kExitOk;
        }

        if (app.got_subcommand(sc_witness)) {
            const auto R = parse_margins(w_r), S = parse_margins(w_s);
            if (!gale_ryser_feasible(R, S)) {
                err << "infeasible margins\n";
                return kExitNegative;
            }
            out << ryser_witness(R, S).to_text();
            return kExitOk;
        }

        if (app.got_subcommand(sc_compare)) {
            const BinaryMatrix a = read_matrix_input(c_a);
            const BinaryMatrix b = read_matrix_input(c_b);
            const bool do_bruhat = c_order != "secondary";
            const bool do_secondary = c_order != "bruhat";
            nlohmann::json j;
            bool exhausted = false;
            std::ostringstream text;
            if (do_bruhat) {
                const bool ab = bruhat_leq(a, b), ba = bruhat_leq(b, a);
                text << "bruhat a<=b: " << (ab ? "yes" : "no") << "\n";
                text << "bruhat b<=a: " << (ba ? "yes" : "no") << "\n";
                j["bruhat"] = {{"a_leq_b", ab}, {"b_leq_a", ba}};
            }
            if (do_secondary) {
                const Reach ab = secondary_leq(a, b, c_budget);
                const Reach ba = secondary_leq(b, a, c_budget);
                text << "secondary a<=b: " << reach_name(ab) << "\n";
                text << "secondary b<=a: " << reach_name(ba) << "\n";
                j["secondary"] = {{"a_leq_b", reach_name(ab)}, {"b_leq_a", reach_name(ba)}};
                exhausted = ab == Reach::exhausted || ba == Reach::exhausted;
            }
            if (c_format == "json")
                out << j.dump(2) << "\n";
            else
                out << text.str();
            return exhausted ? kExitTooLarge : kExitOk;
        }

        if (app.got_subcommand(sc_hasse)) {
            const ClassSpec spec = spec_from_flags(h_n, h_k, h_r, h_s);
            const HasseDiagram h = build_hasse(
                spec, h_order == "bruhat" ? OrderKind::bruhat : OrderKind::secondary, h_cap);
            if (h_format == "json")
                out << hasse_to_json(h).dump(2) << "\n";
            else
                out << h.to_dot();
            return kExitOk;
        }

        if (app.got_subcommand(sc_coincide)) {
            const ClassSpec spec = spec_from_flags(o_n, o_k, o_r, o_s);
            const CoincidenceResult res = orders_coincide(spec, o_cap);
            if (o_format == "json") {
                out << coincidence_to_json(spec, res).dump(2) << "\n";
            } else if (res.status == CoincideStatus::coincide) {
                out << "coincide\n";
            } else if (res.status == CoincideStatus::differ) {
                out << "differ\n" << res.witness->first.to_text() << "\n"
                    << res.witness->second.to_text();
            } else {
                out << "class too large\n";
            }
            if (res.status == CoincideStatus::too_large) return kExitTooLarge;
            return res.status == CoincideStatus::coincide ? kExitOk : kExitNegative;
        }

        if (app.got_subcommand(sc_cex)) {
            const CounterexampleCertificate cert = counterexample(x_n, x_k);
            nlohmann::json j = certificate_to_json(cert);
            bool ok = true;
            if (x_verify) {
                const CertificateReport rep = verify_certificate(cert);
                j["verified"] = rep.ok;
                j["verification"] = report_to_json(rep);
                ok = rep.ok;
            }
            out << j.dump(2) << "\n";
            return ok ? kExitOk : kExitNegative;
        }

        if (app.got_subcommand(sc_thm)) {
            const auto cells = verify_theorem(t_max_n, t_cap, threads);
            if (t_format == "json")
                out << theorem_table_to_json(cells).dump(2) << "\n";
            else
                print_theorem_table(out, cells);
            for (const auto& cell : cells)
                if (!cell.ok) return kExitNegative;
            return kExitOk;
        }

        if (app.got_subcommand(sc_lemma)) {
            const LemmaFamilyReport rep = verify_lemma_family(l_k, l_m);
            if (l_format == "json")
                out << lemma_report_to_json(rep).dump(2) << "\n";
            else
                print_lemma_report(out, rep);
            return rep.ok() ? kExitOk : kExitNegative;
        }
    } catch (const ClassTooLarge& e) {
        err << e.what() << "\n";
        return kExitTooLarge;
    } catch (const CLI::ValidationError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    err << "no subcommand\n";
    return kExitUsage;
}

}  // namespace bruhat
