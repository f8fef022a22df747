// Command-line front end: minimal-triangle tables, classification, the
// sliding scan, norm-equation cosets and excitation counts.
//
// Exit codes: 0 success, 2 bound error, 3 internal invariant violation.
#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <numeric>
#include <sstream>
#include <tuple>

#include <CLI11.hpp>
#include <json.hpp>

#include "hc/cyclotomic.hpp"
#include "hc/emit.hpp"
#include "hc/excitations.hpp"
#include "hc/gaussian.hpp"
#include "hc/min_triangles.hpp"
#include "hc/sliding_scan.hpp"

namespace {

using hc::i64;
using nlohmann::json;

i64 env_default(const char* name, i64 fallback) {
    if (const char* v = std::getenv(name)) return std::atoll(v);
    return fallback;
}

hc::ZType parse_ztype(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw CLI::ValidationError("--ztype expects P,Q");
    hc::ZType zt;
    zt.p = std::stoll(text.substr(0, comma));
    zt.q = std::stoll(text.substr(comma + 1));
    if (std::gcd(zt.p, zt.q) != 1) throw CLI::ValidationError("--ztype requires coprime P,Q");
    return zt;
}

hc::LatticePoint parse_point(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw CLI::ValidationError("point expects x,y");
    return {std::stoll(text.substr(0, comma)), std::stoll(text.substr(comma + 1))};
}

void print_records(const std::vector<hc::MinRecord>& records, hc::OutputFormat fmt) {
    switch (fmt) {
        case hc::OutputFormat::Text: std::cout << hc::emit_records_text(records); break;
        case hc::OutputFormat::Csv: std::cout << hc::emit_records_csv(records); break;
        case hc::OutputFormat::Json: std::cout << hc::emit_records_json(records); break;
    }
}

void print_sliding(const std::vector<hc::SlidingRow>& rows, hc::OutputFormat fmt) {
    switch (fmt) {
        case hc::OutputFormat::Text: std::cout << hc::emit_sliding_text(rows); break;
        case hc::OutputFormat::Csv: std::cout << hc::emit_sliding_csv(rows); break;
        case hc::OutputFormat::Json: std::cout << hc::emit_sliding_json(rows); break;
    }
}

json coset_to_json(const hc::Coset& c, int j_lo, int j_hi) {
    json members = json::array();
    for (int j = j_lo; j <= j_hi; ++j) {
        for (const auto half : {hc::CosetHalf::Plus, hc::CosetHalf::Swap}) {
            const auto q = hc::coset_member(c, j, half);
            const auto ty = hc::type_of(q);
            members.push_back({{"j", j},
                               {"half", half == hc::CosetHalf::Plus ? "plus" : "swap"},
                               {"quad", {q.m, q.n, q.k, q.l}},
                               {"sides", {ty.l0sq, ty.l1sq, ty.l2sq}},
                               {"S", hc::doubled_area(q)}});
        }
    }
    return {{"leader", {c.leader.m, c.leader.n, c.leader.k, c.leader.l}},
            {"r", c.r},
            {"signature", {c.sig_a, c.sig_b}},
            {"degenerate", c.degenerate},
            {"members", members}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hard-core minimal triangles, sliding and norm-equation cosets"};
    app.require_subcommand(1);

    // mintri
    auto* mintri = app.add_subcommand("mintri", "per-d2 minimal-triangle records");
    i64 mt_max = env_default("HC_MAX_D2", 340);
    bool mt_collapse = false;
    std::string mt_format = "text";
    mintri->add_option("--max-d2", mt_max, "largest d2 to classify");
    mintri->add_flag("--collapse", mt_collapse, "keep only the maximal d2 per minimizing family");
    mintri->add_option("--format", mt_format, "text|csv|json");

    // classify
    auto* clas = app.add_subcommand("classify", "full record for a single d2");
    i64 cl_d2 = 0;
    std::string cl_format = "json";
    clas->add_option("--d2", cl_d2, "squared exclusion distance")->required();
    clas->add_option("--format", cl_format, "text|csv|json");

    // sliding scan
    auto* sliding = app.add_subcommand("sliding", "fine-lattice sliding scan");
    std::vector<std::string> sl_types;
    i64 sl_max_d = env_default("HC_MAX_D", 100000);
    int sl_threads = 1;
    std::string sl_checkpoint, sl_format = "text";
    bool sl_extended = false;
    sliding->add_option("--ztype", sl_types, "sliding type P,Q (repeatable)");
    sliding->add_flag("--extended", sl_extended, "use the extended (p,q) list");
    sliding->add_option("--max-d", sl_max_d, "largest exclusion distance D");
    sliding->add_option("--threads", sl_threads, "worker threads");
    sliding->add_option("--checkpoint", sl_checkpoint, "resume/progress file");
    sliding->add_option("--format", sl_format, "text|csv|json");

    // cosets
    auto* cosets = app.add_subcommand("cosets", "norm-equation solution cosets and families");
    i64 co_r = 0;
    std::string co_leader;
    int co_jlo = 0, co_jhi = 3;
    cosets->add_option("--r", co_r, "norm value");
    cosets->add_option("--leader", co_leader, "quadruple m,n,k,l");
    cosets->add_option("--j-lo", co_jlo, "member range start");
    cosets->add_option("--j-hi", co_jhi, "member range end");

    // norm-solve
    auto* normsolve = app.add_subcommand("norm-solve", "solvability and coset count for r");
    i64 ns_r = 0;
    normsolve->add_option("--r", ns_r, "norm value")->required();

    // excite
    auto* excite = app.add_subcommand("excite", "excitation census for a sublattice");
    std::string ex_e1, ex_e2;
    i64 ex_d2 = 0;
    excite->add_option("--e1", ex_e1, "basis vector x,y")->required();
    excite->add_option("--e2", ex_e2, "basis vector x,y")->required();
    excite->add_option("--d2", ex_d2, "squared exclusion distance")->required();

    // tables
    auto* tables = app.add_subcommand("tables", "regenerate the reference tables");
    int tb_which = 3;
    i64 tb_max = 0;
    std::string tb_format = "text";
    tables->add_option("--which", tb_which, "1, 2, 3 or 4");
    tables->add_option("--max-d2", tb_max, "range override");
    tables->add_option("--format", tb_format, "text|csv|json");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*mintri) {
            if (mt_max < 1 || mt_max > 4000000) return 2;
            hc::GaussianTable gt(mt_max + 16);
            print_records(hc::classify_range(gt, mt_max, {mt_collapse}),
                          hc::parse_format(mt_format));
        } else if (*clas) {
            if (cl_d2 < 1 || cl_d2 > 4000000) return 2;
            hc::GaussianTable gt(cl_d2 + 16);
            if (!gt.attainable(cl_d2)) {
                std::cerr << cl_d2 << " is not a sum of two squares\n";
                return 2;
            }
            print_records({hc::classify(cl_d2)}, hc::parse_format(cl_format));
        } else if (*sliding) {
            std::vector<hc::ZType> types;
            if (sl_extended)
                types = hc::extended_ztypes();
            else if (sl_types.empty())
                types = hc::required_ztypes();
            else
                for (const auto& t : sl_types) types.push_back(parse_ztype(t));
            std::vector<hc::ScanInstance> all;
            for (const auto& zt : types) {
                if (sl_max_d > 66438468 / zt.z2()) {
                    std::cerr << "max-d exceeds the no-sliding bound for z^2=" << zt.z2() << "\n";
                    return 2;
                }
                hc::ScanParams params;
                params.threads = sl_threads;
                params.checkpoint_path = sl_checkpoint;
                auto part = hc::scan(zt, sl_max_d, params);
                all.insert(all.end(), part.begin(), part.end());
            }
            std::sort(all.begin(), all.end(),
                      [](const hc::ScanInstance& a, const hc::ScanInstance& b) {
                          return std::tuple{a.d2, a.w, a.apexes} < std::tuple{b.d2, b.w, b.apexes};
                      });
            all.erase(std::unique(all.begin(), all.end(),
                                  [](const hc::ScanInstance& a, const hc::ScanInstance& b) {
                                      return a.d2 == b.d2 && a.w == b.w && a.apexes == b.apexes;
                                  }),
                      all.end());
            print_sliding(hc::rows_from_instances(all), hc::parse_format(sl_format));
        } else if (*cosets) {
            json out;
            if (co_r > 0) {
                const auto families = hc::classify_families(co_r);
                json fams = json::array();
                for (const auto& fam : families) {
                    json cs = json::array();
                    for (const auto& c : fam.cosets) cs.push_back(coset_to_json(c, co_jlo, co_jhi));
                    fams.push_back({{"label", hc::to_string(fam.label)},
                                    {"size", fam.cosets.size()},
                                    {"cosets", cs}});
                }
                out = {{"r", co_r}, {"families", fams}};
            } else if (!co_leader.empty()) {
                std::vector<i64> q;
                std::istringstream is(co_leader);
                std::string tok;
                while (std::getline(is, tok, ',')) q.push_back(std::stoll(tok));
                if (q.size() != 4) throw CLI::ValidationError("--leader expects m,n,k,l");
                const auto c = hc::leader_of({q[0], q[1], q[2], q[3]});
                out = coset_to_json(c, co_jlo, co_jhi);
            } else {
                throw CLI::ValidationError("cosets needs --r or --leader");
            }
            std::cout << out.dump(2) << "\n";
        } else if (*normsolve) {
            if (ns_r < 1) return 2;
            json out = {{"r", ns_r}, {"solvable", hc::norm_solvable(ns_r)}};
            if (hc::norm_solvable(ns_r)) {
                const auto cs = hc::solve_norm_equation(ns_r);
                out["cosets"] = cs.size();
                if (const auto formula = hc::coset_count_formula(ns_r)) out["closed_form"] = *formula;
                json leaders = json::array();
                for (const auto& c : cs)
                    leaders.push_back({c.leader.m, c.leader.n, c.leader.k, c.leader.l});
                out["leaders"] = leaders;
            }
            std::cout << out.dump(2) << "\n";
        } else if (*excite) {
            hc::Sublattice sub(parse_point(ex_e1), parse_point(ex_e2), ex_d2);
            const auto rep = hc::count_excitations(sub);
            json out = {{"singles", rep.singles}, {"doubles", rep.doubles},
                        {"triples", rep.triples}, {"quads", rep.quads},
                        {"total", rep.total}};
            std::cout << out.dump(2) << "\n";
        } else if (*tables) {
            if (tb_which == 1) {
                hc::GaussianTable gt(tb_max > 0 ? tb_max : 300);
                bool first = true;
                for (const auto v : gt.attainable_up_to(tb_max > 0 ? tb_max : 300)) {
                    std::cout << (first ? "" : ",") << v;
                    first = false;
                }
                std::cout << "\n";
            } else if (tb_which == 2) {
                const i64 bound = tb_max > 0 ? tb_max : 2000;
                hc::GaussianTable gt(bound + 16);
                std::vector<hc::SlidingRow> rows;
                for (const auto d2 : gt.attainable_up_to(bound)) {
                    const auto row = hc::detect_sliding(d2);
                    if (!row) continue;
                    // maximal-d2 collapse: report at the shortest trapeze side
                    i64 min_side = row->w.x * row->w.x + row->w.y * row->w.y;
                    for (const auto& a : row->apexes)
                        min_side = std::min(min_side, a.x * a.x + a.y * a.y);
                    if (min_side == d2) rows.push_back(*row);
                }
                print_sliding(rows, hc::parse_format(tb_format));
            } else {
                const i64 bound = tb_max > 0 ? tb_max : (tb_which == 3 ? 336 : 4709);
                hc::GaussianTable gt(bound + 16);
                std::vector<hc::MinRecord> rows;
                for (auto& rec : hc::classify_range(gt, bound, {true})) {
                    if (tb_which == 3 && rec.label == hc::ClassLabel::A) rows.push_back(rec);
                    if (tb_which == 4 && (rec.label == hc::ClassLabel::B0 ||
                                          rec.label == hc::ClassLabel::B1 ||
                                          rec.label == hc::ClassLabel::B2))
                        rows.push_back(rec);
                }
                print_records(rows, hc::parse_format(tb_format));
            }
        }
    } catch (const hc::OverflowError& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "bound error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
