#include "lsa/search.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "lsa/errors.hpp"
#include "lsa/families.hpp"
#include "lsa/format.hpp"

namespace lsa {

namespace {

// Basis ids: 0..n-1 even, n..n+m-1 odd. Free coefficients ("slots") are laid
// out pair-block by pair-block (even-even, even-odd, odd-even, odd-odd),
// within a block by (left index, right index, target index). A pair's slots
// are consecutive, so pairs complete in a fixed order; a superidentity
// residual becomes checkable exactly when the last pair it depends on
// completes.
struct Layout {
    int n, m, total;
    struct PairRef {
        int a, b;        // basis ids
        int first_slot;  // -1 when the target component is zero-dimensional
        int target_dim;
        bool target_even;
    };
    std::vector<PairRef> pairs;             // slotted pairs, completion order
    std::vector<std::vector<int>> pair_of;  // [a][b] -> slotted ordinal or -1
    int num_slots = 0;
    std::vector<int> slot_pair;          // slot -> owning pair ordinal
    std::vector<char> slot_closes_pair;  // slot is the pair's last one
    // triple (x, y, z) encoded x*T^2 + y*T + z, bucketed by trigger pair.
    std::vector<std::vector<int>> triggers;

    bool is_even(int b) const { return b < n; }
    int comp_dim(bool even) const { return even ? n : m; }
    int comp_member(bool even, int t) const { return even ? t : n + t; }

    explicit Layout(int n_, int m_) : n(n_), m(m_), total(n_ + m_) {
        pair_of.assign(total, std::vector<int>(total, -1));
        auto add_block = [&](bool a_even, bool b_even) {
            const bool t_even = a_even == b_even;
            const int adim = comp_dim(a_even), bdim = comp_dim(b_even), tdim = comp_dim(t_even);
            for (int i = 0; i < adim; ++i)
                for (int j = 0; j < bdim; ++j) {
                    if (tdim == 0) continue;
                    const int a = comp_member(a_even, i), b = comp_member(b_even, j);
                    pair_of[a][b] = static_cast<int>(pairs.size());
                    pairs.push_back({a, b, num_slots, tdim, t_even});
                    num_slots += tdim;
                }
        };
        add_block(true, true);
        add_block(true, false);
        add_block(false, true);
        add_block(false, false);

        slot_pair.assign(num_slots, -1);
        slot_closes_pair.assign(num_slots, 0);
        for (size_t p = 0; p < pairs.size(); ++p) {
            for (int t = 0; t < pairs[p].target_dim; ++t)
                slot_pair[pairs[p].first_slot + t] = static_cast<int>(p);
            slot_closes_pair[pairs[p].first_slot + pairs[p].target_dim - 1] = 1;
        }

        triggers.assign(pairs.size(), {});
        for (int x = 0; x < total; ++x)
            for (int y = 0; y < total; ++y)
                for (int z = 0; z < total; ++z) {
                    int trig = -1;
                    auto need = [&](int a, int b) { trig = std::max(trig, pair_of[a][b]); };
                    need(y, z);
                    need(x, y);
                    need(x, z);
                    const bool pyz = is_even(y) == is_even(z);
                    for (int t = 0; t < comp_dim(pyz); ++t) need(x, comp_member(pyz, t));
                    const bool pxy = is_even(x) == is_even(y);
                    for (int t = 0; t < comp_dim(pxy); ++t) need(comp_member(pxy, t), z);
                    const bool pxz = is_even(x) == is_even(z);
                    for (int t = 0; t < comp_dim(pxz); ++t) need(comp_member(pxz, t), y);
                    if (trig >= 0) triggers[trig].push_back((x * total + y) * total + z);
                }
    }

    // Residual of the superidentity on the basis triple, over an assignment
    // in which every pair the residual depends on is complete.
    bool residual_zero(const std::vector<Scalar>& values, int x, int y, int z) const {
        const bool rx = is_even(x), ry = is_even(y), rz = is_even(z);
        const bool target_even = rx == (ry == rz);
        const int rdim = comp_dim(target_even);
        if (rdim == 0) return true;
        std::vector<Scalar> r(rdim);
        auto slot = [&](int pair, int t) -> const Scalar& {
            return values[pairs[pair].first_slot + t];
        };
        auto accumulate = [&](int first, int second_fixed, bool second_is_right, int sign,
                              bool mid_even) {
            // sign * sum_w [first]_w * (w, fixed) or (fixed-as-x, w) products.
            for (int t = 0; t < comp_dim(mid_even); ++t) {
                const int w = comp_member(mid_even, t);
                const int p1 = first;
                const Scalar& c = slot(p1, t);
                if (c.is_zero()) continue;
                const int p2 = second_is_right ? pair_of[w][second_fixed]
                                               : pair_of[second_fixed][w];
                if (p2 < 0) continue;
                for (int u = 0; u < rdim; ++u) {
                    const Scalar& d = slot(p2, u);
                    if (d.is_zero()) continue;
                    r[u] += sign > 0 ? c * d : -(c * d);
                }
            }
        };
        // [x, [y, z]]
        const bool pyz = ry == rz;
        if (pair_of[y][z] >= 0)
            accumulate(pair_of[y][z], x, false, +1, pyz);
        // -[[x, y], z]
        const bool pxy = rx == ry;
        if (pair_of[x][y] >= 0)
            accumulate(pair_of[x][y], z, true, -1, pxy);
        // +(-1)^{alpha beta} [[x, z], y]
        const bool pxz = rx == rz;
        const int sign = (!ry && !rz) ? -1 : +1;
        if (pair_of[x][z] >= 0)
            accumulate(pair_of[x][z], y, true, sign, pxz);
        return std::all_of(r.begin(), r.end(), [](const Scalar& s) { return s.is_zero(); });
    }

    bool checks_pass_at(const std::vector<Scalar>& values, int pair) const {
        for (const int enc : triggers[pair]) {
            const int z = enc % total, y = (enc / total) % total, x = enc / (total * total);
            if (!residual_zero(values, x, y, z)) return false;
        }
        return true;
    }

    SuperAlgebra build(const std::vector<Scalar>& values) const {
        std::vector<TableEntry> entries;
        for (const PairRef& p : pairs) {
            Element v(n, m);
            bool nonzero = false;
            for (int t = 0; t < p.target_dim; ++t) {
                const Scalar& c = values[p.first_slot + t];
                if (c.is_zero()) continue;
                nonzero = true;
                if (p.target_even)
                    v.even_at(t) = c;
                else
                    v.odd_at(t) = c;
            }
            if (!nonzero) continue;
            const Parity pa = is_even(p.a) ? Parity::even : Parity::odd;
            const Parity pb = is_even(p.b) ? Parity::even : Parity::odd;
            const int ia = is_even(p.a) ? p.a + 1 : p.a - n + 1;
            const int ib = is_even(p.b) ? p.b + 1 : p.b - n + 1;
            entries.push_back({pa, ia, pb, ib, v});
        }
        return SuperAlgebra::make(n, m, entries);
    }
};

struct StopFlag {
    std::atomic<bool> stop{false};
    std::atomic<uint64_t> nodes{0};
    uint64_t budget = 0;
    bool hit(uint64_t add) {
        const uint64_t seen = nodes.fetch_add(add) + add;
        if (budget && seen > budget) stop.store(true);
        return stop.load();
    }
};

// DFS over slots [from, to); invokes leaf() at depth `to`. Assumes values
// below `from` already assigned and consistent. Returns false when stopped.
bool walk(const Layout& lay, const std::vector<Scalar>& coeffs, std::vector<Scalar>& values,
          int from, int to, uint64_t& local_nodes, StopFlag* flag,
          const std::function<bool()>& leaf) {
    if (from == to) return leaf();
    const int pair = lay.slot_pair[from];
    const bool closes = lay.slot_closes_pair[from] != 0;
    for (const Scalar& c : coeffs) {
        ++local_nodes;
        if (flag && (local_nodes & 0x3ff) == 0 && flag->hit(0x400)) return false;
        values[from] = c;
        if (closes && !lay.checks_pass_at(values, pair)) continue;
        if (!walk(lay, coeffs, values, from + 1, to, local_nodes, flag, leaf)) return false;
    }
    return true;
}

void validate_spec(const SearchSpec& spec) {
    if (spec.n < 0 || spec.m < 0) throw Error("negative dimension");
    if (spec.coeffs.empty()) throw Error("coefficient set must be nonempty");
    if (std::none_of(spec.coeffs.begin(), spec.coeffs.end(),
                     [](const Scalar& s) { return s.is_zero(); }))
        throw Error("coefficient set must contain 0");
    for (size_t i = 0; i < spec.coeffs.size(); ++i)
        for (size_t j = i + 1; j < spec.coeffs.size(); ++j)
            if (spec.coeffs[i] == spec.coeffs[j])
                throw Error("coefficient set contains a duplicate value");
}

void refuse_if_over_budget(const SearchSpec& spec) {
    const BigInt size = search_space_size(spec);
    if (!spec.force && size > BigInt(static_cast<unsigned long>(spec.budget))) {
        std::ostringstream msg;
        msg << "search space |coeffs|^(free coefficients) = " << spec.coeffs.size() << "^"
            << free_coefficient_count(spec.n, spec.m) << " = " << size.get_str()
            << " exceeds the budget of " << spec.budget << " node visits; use force to override";
        throw BudgetExceeded(msg.str());
    }
}

std::vector<int> parse_digits(const std::string& csv, int depth, size_t radix) {
    std::vector<int> out;
    if (csv.empty()) return out;
    std::istringstream in(csv);
    std::string tok;
    while (std::getline(in, tok, ',')) out.push_back(std::stoi(tok));
    if (static_cast<int>(out.size()) != depth)
        throw Error("resume cursor has " + std::to_string(out.size()) + " digits, expected " +
                    std::to_string(depth));
    for (int d : out)
        if (d < 0 || d >= static_cast<int>(radix)) throw Error("resume cursor digit out of range");
    return out;
}

std::string digits_csv(const std::vector<int>& digits) {
    std::string s;
    for (size_t i = 0; i < digits.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(digits[i]);
    }
    return s;
}

}  // namespace

int free_coefficient_count(int n, int m) { return n * n * n + 3 * n * m * m; }

BigInt search_space_size(const SearchSpec& spec) {
    BigInt size = 1;
    const int free = free_coefficient_count(spec.n, spec.m);
    for (int i = 0; i < free; ++i) size *= static_cast<unsigned long>(spec.coeffs.size());
    return size;
}

Prop31 check_prop31(const SuperAlgebra& a) {
    if (a.odd_dim() != 0) throw Error("check_prop31 takes an even (m = 0) algebra");
    const int n = a.even_dim();
    const CentralSeries cs = central_series(a);
    if (!cs.nilpotent) return Prop31::not_applicable;
    const int l = static_cast<int>(cs.terms.size());
    if (l >= n) return Prop31::not_applicable;  // includes single-generated (l = n + 1)
    auto [g2e, g2o] = cs.terms.size() > 1 ? cs.terms[1].dims() : std::pair<size_t, size_t>{0, 0};
    if (n - static_cast<int>(g2e) <= 1) return Prop31::not_applicable;  // single-generated
    if (natural_gradation(a).algebra.is_lie()) return Prop31::not_applicable;
    const int dim_a3 = cs.terms.size() > 2 ? static_cast<int>(cs.terms[2].dims().first) : 0;
    return dim_a3 <= n - 4 ? Prop31::holds : Prop31::violated;
}

void enumerate(const SearchSpec& spec, const std::function<bool(const SuperAlgebra&)>& yield) {
    validate_spec(spec);
    refuse_if_over_budget(spec);
    const Layout lay(spec.n, spec.m);
    std::vector<Scalar> values(lay.num_slots);
    uint64_t nodes = 0;
    walk(lay, spec.coeffs, values, 0, lay.num_slots, nodes, nullptr, [&]() {
        SuperAlgebra a = lay.build(values);
        // Independent re-validation of every yield.
        if (!a.superidentity_violations().empty())
            throw Error("internal pruning soundness failure: yielded table is invalid");
        return yield(a);
    });
}

namespace {

struct Partial {
    uint64_t nodes = 0;
    uint64_t valid = 0;
    uint64_t nilpotent = 0;
    uint64_t non_nilpotent = 0;
    std::map<std::string, uint64_t> histogram;
    std::vector<std::pair<std::string, std::string>> attainers;
    uint64_t maximal = 0;
    std::vector<std::string> v_maximal;
    uint64_t bound_checked = 0;
    std::vector<std::string> v_bound;
    uint64_t sg_checked = 0;
    std::vector<std::string> v_sg;
    uint64_t p31_app = 0, p31_na = 0;
    std::vector<std::string> v_p31;
    bool completed = false;
};

void absorb(CensusReport& r, const Partial& p) {
    r.nodes_visited += p.nodes;
    r.valid_count += p.valid;
    r.nilpotent_count += p.nilpotent;
    r.non_nilpotent_count += p.non_nilpotent;
    for (const auto& [k, v] : p.histogram) r.histogram[k] += v;
    r.attainers.insert(r.attainers.end(), p.attainers.begin(), p.attainers.end());
    r.maximal_attainers += p.maximal;
    r.maximal_violations.insert(r.maximal_violations.end(), p.v_maximal.begin(),
                                p.v_maximal.end());
    r.bound_checked += p.bound_checked;
    r.bound_violations.insert(r.bound_violations.end(), p.v_bound.begin(), p.v_bound.end());
    r.single_generated_checked += p.sg_checked;
    r.single_generated_violations.insert(r.single_generated_violations.end(), p.v_sg.begin(),
                                         p.v_sg.end());
    r.prop31_applicable += p.p31_app;
    r.prop31_not_applicable += p.p31_na;
    r.prop31_violations.insert(r.prop31_violations.end(), p.v_p31.begin(), p.v_p31.end());
}

void tally(const SearchSpec& spec, const std::optional<Fingerprint>& model_fp,
           const SuperAlgebra& a, Partial& out) {
    ++out.valid;
    const int n = spec.n, m = spec.m;
    const CentralSeries cs = central_series(a);
    if (!cs.nilpotent) {
        ++out.non_nilpotent;
        return;
    }
    ++out.nilpotent;
    const int ni = static_cast<int>(cs.terms.size());
    std::pair<size_t, size_t> l2 =
        cs.terms.size() > 1 ? cs.terms[1].dims() : std::pair<size_t, size_t>{0, 0};
    const int gens = n + m - static_cast<int>(l2.first + l2.second);

    std::optional<CharSeq> charseq;
    if (n >= 1) {
        try {
            charseq = characteristic_sequence(a, spec.charseq_trials, spec.charseq_seed);
        } catch (const Error&) {
        }
    }
    std::string key = "nilindex=" + std::to_string(ni) +
                      ";charseq=" + (charseq ? charseq->str() : "undefined");
    ++out.histogram[key];

    const std::string table = serialize_lsa(a);
    if (ni >= n + m)
        out.attainers.emplace_back(table,
                                   fingerprint(a, spec.charseq_trials, spec.charseq_seed).line());

    // Single-generated <=> maximal nilindex (both directions).
    ++out.sg_checked;
    if ((ni == n + m + 1) != (gens == 1))
        out.v_sg.push_back("nilindex=" + std::to_string(ni) + " generators=" +
                           std::to_string(gens) + "\n" + table);

    if (ni == n + m + 1) {
        ++out.maximal;
        if (!model_fp) {
            out.v_maximal.push_back("maximal nilindex attained at dims without a model\n" + table);
        } else {
            const Fingerprint fp = fingerprint(a, spec.charseq_trials, spec.charseq_seed);
            if (fp.line() != model_fp->line())
                out.v_maximal.push_back("fingerprint " + fp.line() + " != model " +
                                        model_fp->line() + "\n" + table);
        }
    }

    if (ni == n + m && n >= 1) {
        ++out.bound_checked;
        const int n1 = charseq ? charseq->even_part.first() : 0;
        const int m1 = charseq ? charseq->odd_part.first() : 0;
        if (!charseq || !(n1 >= n - 1 || m1 == m))
            out.v_bound.push_back("charseq " + (charseq ? charseq->str() : "undefined") +
                                  " breaks n1 >= n-1 or m1 = m\n" + table);
    }

    switch (check_prop31(a.even_part())) {
        case Prop31::holds:
            ++out.p31_app;
            break;
        case Prop31::not_applicable:
            ++out.p31_na;
            break;
        case Prop31::violated:
            ++out.p31_app;
            out.v_p31.push_back(table);
            break;
    }
}

}  // namespace

CensusReport census(const SearchSpec& spec) {
    validate_spec(spec);
    refuse_if_over_budget(spec);
    const Layout lay(spec.n, spec.m);

    CensusReport report;
    report.n = spec.n;
    report.m = spec.m;
    for (const Scalar& c : spec.coeffs) report.coeff_literals.push_back(c.str());
    report.free_coefficients = free_coefficient_count(spec.n, spec.m);
    report.space_size = search_space_size(spec).get_str();
    report.resumed_from = spec.resume;

    std::optional<Fingerprint> model_fp;
    if (spec.m == 0 && spec.n >= 1)
        model_fp = fingerprint(null_filiform(spec.n), spec.charseq_trials, spec.charseq_seed);
    else if (spec.m >= 1 && (spec.m == spec.n || spec.m == spec.n + 1))
        model_fp =
            fingerprint(thm21_mixed(spec.n, spec.m), spec.charseq_trials, spec.charseq_seed);

    // Partition depth: enough prefixes to keep workers busy, never more
    // slots than exist. Independent of the worker count so that cursors and
    // merge order are stable.
    int depth = 0;
    {
        uint64_t count = 1;
        while (depth < lay.num_slots && count < 4096) {
            count *= spec.coeffs.size();
            ++depth;
        }
    }
    const std::vector<int> resume_digits = parse_digits(spec.resume, spec.resume.empty() ? 0 : depth,
                                                        spec.coeffs.size());

    // Enumerate surviving prefixes at the partition depth.
    struct Prefix {
        std::vector<int> digits;
    };
    std::vector<Prefix> prefixes;
    uint64_t prefix_nodes = 0;
    {
        std::vector<Scalar> values(lay.num_slots);
        std::vector<int> digits(depth, 0);
        std::function<bool(int)> rec = [&](int slot) -> bool {
            if (slot == depth) {
                if (resume_digits.empty() ||
                    !std::lexicographical_compare(digits.begin(), digits.end(),
                                                  resume_digits.begin(), resume_digits.end()))
                    prefixes.push_back({digits});
                return true;
            }
            const int pair = lay.slot_pair[slot];
            const bool closes = lay.slot_closes_pair[slot] != 0;
            for (size_t ci = 0; ci < spec.coeffs.size(); ++ci) {
                ++prefix_nodes;
                values[slot] = spec.coeffs[ci];
                digits[slot] = static_cast<int>(ci);
                if (closes && !lay.checks_pass_at(values, pair)) continue;
                if (!rec(slot + 1)) return false;
            }
            return true;
        };
        rec(0);
    }

    StopFlag flag;
    flag.budget = spec.budget;
    flag.nodes.store(prefix_nodes);

    std::vector<Partial> partials(prefixes.size());
    std::atomic<size_t> next{0};
    const int jobs = std::max(1, spec.jobs);
    auto worker = [&]() {
        while (true) {
            const size_t i = next.fetch_add(1);
            if (i >= prefixes.size() || flag.stop.load()) return;
            std::vector<Scalar> values(lay.num_slots);
            for (int s = 0; s < depth; ++s) values[s] = spec.coeffs[prefixes[i].digits[s]];
            Partial& part = partials[i];
            const bool finished =
                walk(lay, spec.coeffs, values, depth, lay.num_slots, part.nodes, &flag, [&]() {
                    SuperAlgebra a = lay.build(values);
                    if (!a.superidentity_violations().empty())
                        throw Error("internal pruning soundness failure");
                    tally(spec, model_fp, a, part);
                    return true;
                });
            part.completed = finished;
            flag.hit(part.nodes & 0x3ff);  // account for the remainder
        }
    };
    if (jobs == 1 || prefixes.size() <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    // Deterministic merge in prefix order; on a budget stop, report exactly
    // the leading run of completed prefixes and hand back a cursor.
    report.nodes_visited = prefix_nodes;
    size_t cut = prefixes.size();
    for (size_t i = 0; i < prefixes.size(); ++i) {
        if (!partials[i].completed) {
            cut = i;
            break;
        }
    }
    for (size_t i = 0; i < cut; ++i) absorb(report, partials[i]);
    if (cut < prefixes.size()) report.cursor = digits_csv(prefixes[cut].digits);
    std::sort(report.attainers.begin(), report.attainers.end());
    return report;
}

std::string CensusReport::to_json() const {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["dims"] = {{"n", n}, {"m", m}};
    j["coefficients"] = coeff_literals;
    j["free_coefficients"] = free_coefficients;
    j["space_size"] = space_size;
    j["nodes_visited"] = nodes_visited;
    j["valid_count"] = valid_count;
    j["nilpotent_count"] = nilpotent_count;
    j["non_nilpotent_count"] = non_nilpotent_count;
    j["histogram"] = histogram;
    nlohmann::ordered_json att = nlohmann::ordered_json::array();
    for (const auto& [table, fp] : attainers) att.push_back({{"table", table}, {"fingerprint", fp}});
    j["max_nilindex_attainers"] = att;
    j["verify_maximal_nilindex"] = {{"attainers", maximal_attainers},
                                    {"violations", maximal_violations}};
    j["verify_nilindex_bound"] = {{"checked", bound_checked}, {"violations", bound_violations}};
    j["single_generated_iff_maximal"] = {{"checked", single_generated_checked},
                                         {"violations", single_generated_violations}};
    j["prop31"] = {{"applicable", prop31_applicable},
                   {"not_applicable", prop31_not_applicable},
                   {"violations", prop31_violations}};
    j["resumed_from"] = resumed_from.empty() ? nlohmann::ordered_json(nullptr)
                                             : nlohmann::ordered_json(resumed_from);
    j["cursor"] =
        cursor.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(cursor);
    return j.dump(2) + "\n";
}

}  // namespace lsa
