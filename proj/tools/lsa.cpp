#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "lsa/corpus.hpp"
#include "lsa/errors.hpp"
#include "lsa/format.hpp"
#include "lsa/invariants.hpp"
#include "lsa/prng.hpp"
#include "lsa/search.hpp"

using json = nlohmann::ordered_json;
using namespace lsa;

namespace {

constexpr int kSchemaVersion = 1;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

SuperAlgebra load_algebra(const std::string& path) { return parse_lsa(read_input(path)); }

uint64_t default_seed() {
    if (const char* env = std::getenv("LSA_SEED")) return std::strtoull(env, nullptr, 10);
    return 0;
}

std::string dims_str(std::pair<int, int> d) {
    return "(" + std::to_string(d.first) + "|" + std::to_string(d.second) + ")";
}

std::string dims_str(std::pair<size_t, size_t> d) {
    return dims_str(std::pair<int, int>{static_cast<int>(d.first), static_cast<int>(d.second)});
}

json charseq_json(const CharSeq& cs) {
    return json{{"even", cs.even_part.parts()}, {"odd", cs.odd_part.parts()}};
}

std::string element_str(const Element& e) {
    std::string out;
    auto emit = [&](const std::vector<Scalar>& coords, Parity p) {
        for (size_t i = 0; i < coords.size(); ++i) {
            if (coords[i].is_zero()) continue;
            std::string c = coords[i].str();
            bool negative = c.size() > 1 && c[0] == '-' && c.find(" - ") == std::string::npos &&
                            c.find(" + ") == std::string::npos;
            if (negative) c = c.substr(1);
            if (out.empty())
                out += negative ? "-" : "";
            else
                out += negative ? " - " : " + ";
            if (c != "1") out += c + " ";
            out += basis_token(p, static_cast<int>(i) + 1);
        }
    };
    emit(e.even(), Parity::even);
    emit(e.odd(), Parity::odd);
    return out.empty() ? "0" : out;
}

std::string row_str(const Matrix& rows, size_t i, Parity p) {
    Element e(p == Parity::even ? rows.cols() : 0, p == Parity::odd ? rows.cols() : 0);
    for (size_t c = 0; c < rows.cols(); ++c) {
        if (p == Parity::even)
            e.even_at(c) = rows.at(i, c);
        else
            e.odd_at(c) = rows.at(i, c);
    }
    return element_str(e);
}

int cmd_check(const std::string& file, bool as_json) {
    const SuperAlgebra a = load_algebra(file);
    const auto violations = a.superidentity_violations();
    if (as_json) {
        json out;
        out["schema_version"] = kSchemaVersion;
        out["dims"] = {{"n", a.even_dim()}, {"m", a.odd_dim()}};
        out["leibniz"] = violations.empty();
        json v = json::array();
        for (const auto& viol : violations)
            v.push_back({{"triple", viol.str()}, {"residual", element_str(viol.residual)}});
        out["violations"] = v;
        std::cout << out.dump(2) << "\n";
    } else if (violations.empty()) {
        std::cout << "Leibniz superalgebra: OK\n";
    } else {
        std::cout << "superidentity violations: " << violations.size() << "\n";
        for (const auto& viol : violations)
            std::cout << "  " << viol.str() << " -> " << element_str(viol.residual) << "\n";
    }
    return violations.empty() ? 0 : 1;
}

int cmd_series(const std::string& file, bool as_json) {
    const SuperAlgebra a = load_algebra(file);
    const CentralSeries cs = central_series(a);
    if (as_json) {
        json out;
        out["schema_version"] = kSchemaVersion;
        out["dims"] = {{"n", a.even_dim()}, {"m", a.odd_dim()}};
        json terms = json::array();
        for (const auto& t : cs.terms) {
            auto [e, o] = t.dims();
            terms.push_back({{"even", e}, {"odd", o}});
        }
        out["terms"] = terms;
        out["nilpotent"] = cs.nilpotent;
        out["nilindex"] =
            cs.nilpotent ? json(static_cast<int>(cs.terms.size())) : json(nullptr);
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::string line;
    for (size_t i = 0; i < cs.terms.size(); ++i) {
        if (i) line += " ⊇ ";
        line += "L^" + std::to_string(i + 1) + " " + dims_str(cs.terms[i].dims());
    }
    if (cs.nilpotent)
        line += "; nilindex " + std::to_string(cs.terms.size());
    else
        line += "; series stabilizes: not nilpotent";
    std::cout << line << "\n";
    return 0;
}

int cmd_charseq(const std::string& file, int trials, uint64_t seed, bool as_json) {
    const SuperAlgebra a = load_algebra(file);
    const CharSeq cs = characteristic_sequence(a, trials, seed);
    if (as_json) {
        json out;
        out["schema_version"] = kSchemaVersion;
        out["trials"] = trials;
        out["seed"] = seed;
        out["charseq"] = charseq_json(cs);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << cs.str() << "\n";
    }
    return 0;
}

int cmd_annihilator(const std::string& file, bool as_json) {
    const SuperAlgebra a = load_algebra(file);
    const GradedSubspace r = a.right_annihilator();
    if (as_json) {
        json out;
        out["schema_version"] = kSchemaVersion;
        out["dims"] = {{"even", r.dims().first}, {"odd", r.dims().second}};
        json basis = json::array();
        for (size_t i = 0; i < r.even_basis().rows(); ++i)
            basis.push_back(row_str(r.even_basis(), i, Parity::even));
        for (size_t i = 0; i < r.odd_basis().rows(); ++i)
            basis.push_back(row_str(r.odd_basis(), i, Parity::odd));
        out["basis"] = basis;
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "R(L) dims " << dims_str(r.dims()) << "\n";
    for (size_t i = 0; i < r.even_basis().rows(); ++i)
        std::cout << "  " << row_str(r.even_basis(), i, Parity::even) << "\n";
    for (size_t i = 0; i < r.odd_basis().rows(); ++i)
        std::cout << "  " << row_str(r.odd_basis(), i, Parity::odd) << "\n";
    return 0;
}

int cmd_gradation(const std::string& file, bool as_json) {
    SuperAlgebra a = load_algebra(file);
    if (a.odd_dim() != 0) {
        std::cerr << "note: taking the even part (m = 0 projection)\n";
        a = a.even_part();
    }
    const NaturalGradation g = natural_gradation(a);
    if (as_json) {
        json out;
        out["schema_version"] = kSchemaVersion;
        out["degrees"] = g.degrees;
        out["algebra"] = serialize_lsa(g.algebra);
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    for (size_t i = 0; i < g.degrees.size(); ++i)
        std::cout << "# deg " << basis_token(Parity::even, static_cast<int>(i) + 1) << " = "
                  << g.degrees[i] << "\n";
    std::cout << serialize_lsa(g.algebra);
    return 0;
}

int cmd_fingerprint(const std::string& file, int trials, uint64_t seed, bool as_json) {
    const SuperAlgebra a = load_algebra(file);
    const Fingerprint fp = fingerprint(a, trials, seed);
    if (as_json) {
        json out;
        out["schema_version"] = kSchemaVersion;
        out["trials"] = trials;
        out["seed"] = seed;
        out["fingerprint"] = fp.line();
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << fp.line() << "\n";
    }
    return 0;
}

int cmd_compare(const std::string& f1, const std::string& f2, int trials, uint64_t seed,
                bool as_json) {
    const Fingerprint a = fingerprint(load_algebra(f1), trials, seed);
    const Fingerprint b = fingerprint(load_algebra(f2), trials, seed);
    const bool equal = a == b;
    if (as_json) {
        json out;
        out["schema_version"] = kSchemaVersion;
        out["first"] = a.line();
        out["second"] = b.line();
        out["equal"] = equal;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << a.line() << "\n" << b.line() << "\n";
        std::cout << (equal ? "fingerprints equal (isomorphism not decided)\n"
                            : "fingerprints differ: not isomorphic\n");
    }
    return equal ? 0 : 1;
}

int cmd_family(const std::string& tag_name, int n, int m, const std::string& params_csv,
               const std::string& out_path) {
    const FamilyTag tag = family_tag_from_name(tag_name);
    std::vector<Scalar> params = parse_scalar_csv(params_csv);
    if (params.empty() && family_arity(tag, n, m) > 0)
        params.assign(static_cast<size_t>(family_arity(tag, n, m)), Scalar(0));
    const SuperAlgebra a = make_family(tag, n, m, params);
    const std::string text = serialize_lsa(a);
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw Error("cannot write '" + out_path + "'");
        out << text;
    }
    return 0;
}

int cmd_list(int n, int m, const std::string& sample_csv, int trials, uint64_t seed,
             bool as_json) {
    const std::vector<Scalar> sample = parse_scalar_csv(sample_csv);
    const auto entries = canonical_list(n, m, sample);
    struct Row {
        const CanonicalEntry* entry;
        std::string params;
        std::string fp;
        int nilindex;
        bool leibniz;
    };
    std::vector<Row> rows;
    for (const auto& e : entries) {
        const SuperAlgebra a = make_family(e.tag, e.n, e.m, e.params);
        std::string params = "(";
        for (size_t i = 0; i < e.params.size(); ++i) {
            if (i) params += ",";
            params += e.params[i].str();
        }
        params += ")";
        rows.push_back({&e, params, fingerprint(a, trials, seed).line(), nilindex(a),
                        a.superidentity_violations().empty()});
    }
    // Fingerprint collisions among distinct entries.
    std::vector<std::pair<size_t, size_t>> collisions;
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = i + 1; j < rows.size(); ++j)
            if (rows[i].fp == rows[j].fp) collisions.emplace_back(i, j);

    if (as_json) {
        json out;
        out["schema_version"] = kSchemaVersion;
        out["dims"] = {{"n", n}, {"m", m}};
        json list = json::array();
        for (const auto& r : rows)
            list.push_back({{"family", family_tag_name(r.entry->tag)},
                            {"description", r.entry->description},
                            {"params", r.params},
                            {"nilindex", r.nilindex},
                            {"leibniz", r.leibniz},
                            {"fingerprint", r.fp}});
        out["entries"] = list;
        json cols = json::array();
        for (auto [i, j] : collisions) cols.push_back({{"first", i}, {"second", j}});
        out["fingerprint_collisions"] = cols;
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    for (const auto& r : rows)
        std::cout << family_tag_name(r.entry->tag) << " " << r.params << "  nilindex "
                  << r.nilindex << "  [" << r.entry->description << "]\n";
    std::cout << entries.size() << " entries, " << collisions.size()
              << " fingerprint collision(s)\n";
    for (auto [i, j] : collisions)
        std::cout << "  indistinguishable by fingerprint: " << family_tag_name(rows[i].entry->tag)
                  << " " << rows[i].params << " vs " << family_tag_name(rows[j].entry->tag) << " "
                  << rows[j].params << "\n";
    return 0;
}

int cmd_search(int n, int m, const std::string& coeffs_csv, int jobs, uint64_t budget, bool force,
               const std::string& resume, int trials, uint64_t seed, bool as_json) {
    SearchSpec spec;
    spec.n = n;
    spec.m = m;
    spec.coeffs = parse_scalar_csv(coeffs_csv);
    spec.jobs = jobs;
    spec.budget = budget;
    spec.force = force;
    spec.resume = resume;
    spec.charseq_trials = trials;
    spec.charseq_seed = seed;
    const CensusReport report = census(spec);
    if (as_json) {
        std::cout << report.to_json();
    } else {
        std::cout << "space " << report.space_size << ", valid " << report.valid_count
                  << ", nilpotent " << report.nilpotent_count << ", non-nilpotent "
                  << report.non_nilpotent_count << "\n";
        for (const auto& [key, count] : report.histogram)
            std::cout << "  " << key << ": " << count << "\n";
        std::cout << "nilindex >= n+m attainers: " << report.attainers.size()
                  << "; maximal (n+m+1): " << report.maximal_attainers << "\n";
        std::cout << "checks: " << (report.all_checks_pass() ? "all pass" : "VIOLATIONS") << "\n";
        if (!report.cursor.empty()) std::cout << "stopped; resume cursor: " << report.cursor << "\n";
    }
    return report.all_checks_pass() ? 0 : 1;
}

// Shared by verify-theorems: run fn over [0, count) on `jobs` threads.
void parallel_for(size_t count, int jobs, const std::function<void(size_t)>& fn) {
    if (jobs <= 1) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t)
        pool.emplace_back([&]() {
            while (true) {
                const size_t i = next.fetch_add(1);
                if (i >= count) return;
                fn(i);
            }
        });
    for (auto& th : pool) th.join();
}

int cmd_verify(int max_total_dim, int jobs, int samples, uint64_t seed, bool as_json) {
    struct Check {
        std::string name;
        bool pass;
        std::string detail;
    };
    std::vector<Check> checks;
    auto record = [&](const std::string& name, bool pass, const std::string& detail) {
        checks.push_back({name, pass, detail});
        if (!as_json)
            std::cout << (pass ? "[PASS] " : "[FAIL] ") << name << ": " << detail << "\n";
    };

    const auto corpus = family_corpus(samples, 1);
    {
        std::atomic<uint64_t> bad{0};
        parallel_for(corpus.size(), jobs, [&](size_t i) {
            if (!corpus[i].algebra.superidentity_violations().empty()) ++bad;
            if (nilindex(corpus[i].algebra) != corpus[i].expected_nilindex) ++bad;
            if (corpus[i].expected_charseq &&
                !(characteristic_sequence(corpus[i].algebra) == *corpus[i].expected_charseq))
                ++bad;
        });
        record("family corpus (superidentity, nilindex, charseq)", bad == 0,
               std::to_string(corpus.size()) + " members, " + std::to_string(bad.load()) +
                   " failures");
    }
    {
        // Main-theorem evidence on the corpus: nilindex n+m members satisfy
        // n1 >= n-1 or m1 = m.
        std::atomic<uint64_t> bad{0}, checked{0};
        parallel_for(corpus.size(), jobs, [&](size_t i) {
            const SuperAlgebra& a = corpus[i].algebra;
            if (nilindex(a) != a.total_dim()) return;
            ++checked;
            const CharSeq cs = characteristic_sequence(a);
            if (!(cs.even_part.first() >= a.even_dim() - 1 ||
                  cs.odd_part.first() == a.odd_dim()))
                ++bad;
        });
        record("nilindex bound evidence on corpus", bad == 0,
               std::to_string(checked.load()) + " nilindex-(n+m) members, " +
                   std::to_string(bad.load()) + " counterexamples");
    }
    {
        uint64_t bad = 0, censuses = 0, skipped = 0;
        std::string violations;
        for (int n = 0; n <= max_total_dim; ++n)
            for (int m = 0; n + m <= max_total_dim; ++m) {
                if (n + m == 0) continue;
                SearchSpec spec;
                spec.n = n;
                spec.m = m;
                spec.coeffs = {Scalar(0), Scalar(1), Scalar(-1)};
                spec.jobs = jobs;
                spec.charseq_seed = seed;
                try {
                    const CensusReport r = census(spec);
                    ++censuses;
                    if (!r.all_checks_pass()) {
                        ++bad;
                        violations += " (" + std::to_string(n) + "," + std::to_string(m) + ")";
                    }
                } catch (const BudgetExceeded&) {
                    ++skipped;
                }
            }
        record("censuses up to total dim " + std::to_string(max_total_dim), bad == 0,
               std::to_string(censuses) + " run, " + std::to_string(skipped) +
                   " skipped over budget" + violations);
    }
    {
        // Fingerprint invariance spot check.
        Prng rng(seed + 99);
        uint64_t bad = 0;
        for (const CorpusMember& member : family_corpus_small()) {
            const int n = member.algebra.even_dim(), m = member.algebra.odd_dim();
            Matrix pe(static_cast<size_t>(n), static_cast<size_t>(n));
            Matrix po(static_cast<size_t>(m), static_cast<size_t>(m));
            do {
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        pe.at(i, j) = Scalar(Rational(rng.range(-2, 2)));
                for (int i = 0; i < m; ++i)
                    for (int j = 0; j < m; ++j)
                        po.at(i, j) = Scalar(Rational(rng.range(-2, 2)));
            } while ((n && !is_invertible(pe)) || (m && !is_invertible(po)));
            if (!(fingerprint(member.algebra.change_basis(pe, po)) == fingerprint(member.algebra)))
                ++bad;
        }
        record("fingerprint invariance under basis change", bad == 0,
               std::to_string(family_corpus_small().size()) + " members, " + std::to_string(bad) +
                   " failures");
    }

    bool all = true;
    for (const Check& c : checks) all = all && c.pass;
    if (as_json) {
        json out;
        out["schema_version"] = kSchemaVersion;
        json list = json::array();
        for (const Check& c : checks)
            list.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        out["checks"] = list;
        out["all_pass"] = all;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << (all ? "all checks passed\n" : "CHECKS FAILED\n");
    }
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic toolkit for nilpotent Leibniz superalgebras"};
    app.require_subcommand(1);
    bool as_json = false;

    std::string file, file2, out_path, params_csv, sample_csv, coeffs_csv, resume, tag;
    int n = 0, m = 0, trials = 8, jobs = 1, max_total_dim = 3, samples = 50;
    uint64_t seed = default_seed();
    uint64_t budget = 100'000'000;
    bool force = false;

    auto* check = app.add_subcommand("check", "verify the superidentity of a .lsa file");
    check->add_option("file", file, "input file or - for stdin")->required();

    auto* series = app.add_subcommand("series", "descending central series and nilindex");
    series->add_option("file", file)->required();

    auto* charseq = app.add_subcommand("charseq", "characteristic sequence");
    charseq->add_option("file", file)->required();
    charseq->add_option("--trials", trials, "random candidates beyond the basis (default 8)");
    charseq->add_option("--seed", seed, "candidate seed (default $LSA_SEED or 0)");

    auto* annihilator = app.add_subcommand("annihilator", "right annihilator basis");
    annihilator->add_option("file", file)->required();

    auto* gradation = app.add_subcommand("gradation", "natural gradation of the even part");
    gradation->add_option("file", file)->required();

    auto* fingerprint_cmd = app.add_subcommand("fingerprint", "isomorphism-invariant summary");
    fingerprint_cmd->add_option("file", file)->required();
    fingerprint_cmd->add_option("--trials", trials);
    fingerprint_cmd->add_option("--seed", seed);

    auto* compare = app.add_subcommand("compare", "compare two fingerprints");
    compare->add_option("file1", file)->required();
    compare->add_option("file2", file2)->required();
    compare->add_option("--trials", trials);
    compare->add_option("--seed", seed);

    auto* family = app.add_subcommand("family", "emit a classified family member as .lsa");
    family->add_option("tag", tag, "family tag, e.g. NULL_FILIFORM, L, E_ODD")->required();
    family->add_option("--n", n, "even dimension")->required();
    family->add_option("--m", m, "odd dimension")->required();
    family->add_option("--params", params_csv, "comma-separated scalar literals");
    family->add_option("-o,--output", out_path, "output file (default stdout)");

    auto* list = app.add_subcommand("list", "canonical enumeration at dims (n, m)");
    list->add_option("--n", n)->required();
    list->add_option("--m", m)->required();
    list->add_option("--sample", sample_csv, "sample parameter values (cyclic)");
    list->add_option("--trials", trials);
    list->add_option("--seed", seed);

    auto* search = app.add_subcommand("search", "pruned exhaustive census");
    search->add_option("--n", n)->required();
    search->add_option("--m", m)->required();
    search->add_option("--coeffs", coeffs_csv, "coefficient set, e.g. 0,1,-1")->required();
    search->add_option("--jobs", jobs, "worker threads (default 1)");
    search->add_option("--budget", budget, "node-visit budget (default 1e8)");
    search->add_flag("--force", force, "run even when the space exceeds the budget");
    search->add_option("--resume", resume, "resume cursor from a previous report");
    search->add_option("--trials", trials);
    search->add_option("--seed", seed);

    auto* verify = app.add_subcommand("verify-theorems", "run the verification battery");
    verify->add_option("--max-total-dim", max_total_dim, "census dimension cap (default 3)");
    verify->add_option("--jobs", jobs);
    verify->add_option("--samples", samples, "samples per high-arity family (default 50)");
    verify->add_option("--seed", seed);

    for (CLI::App* sub : {check, series, charseq, annihilator, gradation, fingerprint_cmd,
                          compare, family, list, search, verify})
        sub->add_flag("--json", as_json, "emit machine-readable JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (check->parsed()) return cmd_check(file, as_json);
        if (series->parsed()) return cmd_series(file, as_json);
        if (charseq->parsed()) return cmd_charseq(file, trials, seed, as_json);
        if (annihilator->parsed()) return cmd_annihilator(file, as_json);
        if (gradation->parsed()) return cmd_gradation(file, as_json);
        if (fingerprint_cmd->parsed()) return cmd_fingerprint(file, trials, seed, as_json);
        if (compare->parsed()) return cmd_compare(file, file2, trials, seed, as_json);
        if (family->parsed()) return cmd_family(tag, n, m, params_csv, out_path);
        if (list->parsed()) return cmd_list(n, m, sample_csv, trials, seed, as_json);
        if (search->parsed())
            return cmd_search(n, m, coeffs_csv, jobs, budget, force, resume, trials, seed,
                              as_json);
        if (verify->parsed()) return cmd_verify(max_total_dim, jobs, samples, seed, as_json);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const BudgetExceeded& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
