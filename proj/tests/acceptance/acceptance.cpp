// Acceptance suite: one PASS/FAIL line per criterion, budgets pinned below.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "commands.hpp"
#include "heckelab/checks.hpp"
#include "heckelab/field.hpp"
#include "heckelab/hecke.hpp"
#include "heckelab/ideal.hpp"
#include "heckelab/invariants.hpp"

using namespace heckelab;
namespace cli = heckelab::cli;

namespace {

constexpr double budget_axioms_small = 10.0;
constexpr double budget_axioms_n4 = 120.0;
constexpr double budget_rank = 60.0;
constexpr double budget_identities = 60.0;
constexpr double budget_symbolic_n2 = 30.0;
constexpr double budget_sampled_n3 = 600.0;
constexpr double budget_charpoly = 60.0;
constexpr double budget_centrality = 60.0;
constexpr double budget_classical = 60.0;
constexpr double budget_sensitivity = 120.0;
constexpr double budget_determinism = 120.0;

constexpr int identity_samples = 10;
constexpr int sampled_points = 5;
constexpr std::uint64_t seed = 20240611;

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Verdict {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (cond) return;
        if (ok) detail = what;
        ok = false;
    }
};

int failures = 0;

void report(int id, const char* title, const std::function<Verdict()>& body, double budget) {
    const auto t0 = Clock::now();
    Verdict v;
    try {
        v = body();
    } catch (const std::exception& e) {
        v.ok = false;
        v.detail = std::string("exception: ") + e.what();
    }
    const double secs = since(t0);
    if (v.ok && secs > budget) {
        v.ok = false;
        v.detail = "over budget";
    }
    if (!v.ok) ++failures;
    std::printf("%s %2d %-28s %8.2fs / %6.0fs  %s\n", v.ok ? "PASS" : "FAIL", id, title, secs, budget, v.detail.c_str());
    std::fflush(stdout);
}

cli::Report run_cli(cli::Command cmd, const std::string& builtin, const std::string& field, std::uint64_t s = seed) {
    cli::RunConfig cfg;
    cfg.command = cmd;
    cfg.builtin = builtin;
    cfg.field = field;
    cfg.seed = s;
    return cli::run(cfg);
}

// Every check whose name starts with `prefix` has the expected status and
// point count; at least one such check must exist.
void require_checks(Verdict& v, const cli::Report& r, const std::string& prefix, cli::Status status, int points) {
    int seen = 0;
    for (const auto& c : r.checks) {
        if (c.name.rfind(prefix, 0) != 0) continue;
        ++seen;
        v.require(c.status == status && c.points == points,
                  r.config.builtin.value_or("?") + " " + c.name + " is " + cli::status_name(c.status) + " at " +
                      std::to_string(c.points) + " points " + c.witness);
    }
    v.require(seen > 0, r.config.builtin.value_or("?") + ": no checks named " + prefix + "*");
}

std::string count_line(const cli::Report& r, const std::string& prefix) {
    int n = 0;
    for (const auto& c : r.checks) n += c.name.rfind(prefix, 0) == 0;
    return std::to_string(n) + " " + prefix + "* on " + r.config.builtin.value_or("?");
}

// --- criterion 1 ---------------------------------------------------------

Verdict axioms_small() {
    Verdict v;
    for (int n : {2, 3}) {
        SymbolicField f;
        const auto r = builtin_standard(f, n);
        const auto ybe = check_yang_baxter(f, r);
        const auto hk = check_hecke(f, r);
        v.require(ybe.passed, "std:" + std::to_string(n) + " YBE residual at " + ybe.location);
        v.require(hk.passed, "std:" + std::to_string(n) + " Hecke residual at " + hk.location);
    }
    v.detail = v.ok ? "std:2, std:3 exact over Q(q)" : v.detail;
    return v;
}

Verdict axioms_n4() {
    Verdict v;
    const auto r = run_cli(cli::Command::validate, "std:4", "modular:2305843009213693951:" + std::to_string(sampled_points));
    v.require(static_cast<int>(r.points.size()) == sampled_points, "wrong number of modular points");
    require_checks(v, r, "axiom.yang_baxter", cli::Status::verified, sampled_points);
    require_checks(v, r, "axiom.hecke", cli::Status::verified, sampled_points);
    if (v.ok) v.detail = "std:4 at " + std::to_string(sampled_points) + " residues mod 2^61-1";
    return v;
}

// --- criterion 2 ---------------------------------------------------------

Verdict rank() {
    Verdict v;
    SymbolicField f;
    for (int n : {2, 3}) {
        const auto h = detect_rank(check_closed(validate(f, builtin_standard(f, n))));
        const int p = h.require_rank();
        const auto& chain = h.antisymmetrizers();
        v.require(p == n, "std:" + std::to_string(n) + " rank " + std::to_string(p));
        v.require(static_cast<int>(chain.size()) == p + 1, "chain length");
        if (!v.ok) break;
        v.require(trace_full(chain[static_cast<std::size_t>(p - 1)]) == f.one(), "Tr P^p != 1");
        v.require(trace_full(chain[static_cast<std::size_t>(p)]).is_zero() && chain[static_cast<std::size_t>(p)].is_null(),
                  "P^{p+1} != 0");
    }
    if (v.ok) v.detail = "p = N for N = 2, 3; Tr P^p = 1, P^{p+1} = 0";
    return v;
}

// --- criterion 3 ---------------------------------------------------------

Verdict identities() {
    Verdict v;
    SymbolicField f;
    std::size_t total = 0;
    for (int n : {2, 3}) {
        const auto h = detect_rank(check_closed(validate(f, builtin_standard(f, n))));
        const auto td = trace_data(h);
        auto results = antisymmetrizer_checks(h);
        for (auto& c : structure_checks(h, td, seed, identity_samples)) results.push_back(std::move(c));
        for (const auto& c : results) v.require(c.passed, "std:" + std::to_string(n) + " " + c.name + ": " + c.detail);
        total += results.size();
    }
    if (v.ok) v.detail = std::to_string(total) + " exact checks, " + std::to_string(identity_samples) + " random X each";
    return v;
}

// --- criteria 4 and 5 ----------------------------------------------------

Verdict ideal_suite(cli::Command cmd, const std::string& prefix, double symbolic_budget) {
    Verdict v;
    const auto t0 = Clock::now();
    const auto r2 = run_cli(cmd, "std:2", "symbolic");
    const double t2 = since(t0);
    require_checks(v, r2, prefix, cli::Status::proved, 1);
    v.require(t2 <= symbolic_budget, "N=2 symbolic over its budget");
    const auto r3 = run_cli(cmd, "std:3", "sampled:" + std::to_string(sampled_points));
    require_checks(v, r3, prefix, cli::Status::verified, sampled_points);
    if (v.ok) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "%s proved (%.2fs); %s at %d rational q", count_line(r2, prefix).c_str(), t2,
                      count_line(r3, prefix).c_str(), sampled_points);
        v.detail = buf;
    }
    return v;
}

// --- criterion 6 ---------------------------------------------------------

Verdict charpoly() {
    Verdict v;
    const auto r = run_cli(cli::Command::charpoly, "std:2", "symbolic");
    require_checks(v, r, "charpoly.leading", cli::Status::proved, 1);
    require_checks(v, r, "charpoly.x^", cli::Status::proved, 1);
    require_checks(v, r, "charpoly.eigen_relation", cli::Status::proved, 1);
    require_checks(v, r, "charpoly.proportional", cli::Status::proved, 1);
    if (v.ok) v.detail = "coefficients, eigen relation and w = Delta u proved for std:2";
    return v;
}

// --- criterion 7 ---------------------------------------------------------

Verdict centrality() {
    Verdict v;
    SymbolicField f;
    using S = QScalar;
    const int n = 2;
    const auto h = detect_rank(check_closed(validate(f, builtin_standard(f, n))));
    const auto td = trace_data(h);
    const auto cs = central_set(h, td);
    GradedIdeal<S> ideal(re_relations(h), n, f.one());
    const Alphabet al(n);
    int tested = 0;
    for (int i = 1; i <= 2; ++i)
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b) {
                const auto g = NCPoly<S>::generator(al, a, b, f.one());
                for (const auto* x : {&cs.s[static_cast<std::size_t>(i)], &cs.sigma[static_cast<std::size_t>(i)]}) {
                    const auto c = commutator(*x, g);
                    v.require(ideal.is_member(c).member, "commutator with L(" + std::to_string(a) + "," +
                                                             std::to_string(b) + ") at i=" + std::to_string(i));
                    ++tested;
                }
            }
    if (v.ok) v.detail = std::to_string(tested) + " commutators in the degree-(i+1) ideal";
    return v;
}

// --- criterion 8 ---------------------------------------------------------

using Mat = std::vector<std::vector<Rat>>;

Mat mat_mul(const Mat& a, const Mat& b) {
    const std::size_t n = a.size();
    Mat c(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

// Leibniz determinant of the principal submatrix on `idx`.
Rat principal_minor(const Mat& m, std::vector<std::size_t> idx) {
    std::vector<std::size_t> perm(idx.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    Rat det;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < perm.size(); ++i)
            for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
        Rat t(1);
        for (std::size_t i = 0; i < perm.size(); ++i) t *= m[idx[i]][idx[perm[i]]];
        det += inversions % 2 ? -t : t;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

// Elementary symmetric functions of the eigenvalues: sums of principal minors.
std::vector<Rat> elementary(const Mat& m) {
    const std::size_t n = m.size();
    std::vector<Rat> e(n + 1);
    e[0] = Rat(1);
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) idx.push_back(i);
        e[idx.size()] += principal_minor(m, idx);
    }
    return e;
}

Rat evaluate(const NCPoly<Rat>& f, const Mat& m) {
    const int n = static_cast<int>(m.size());
    const Alphabet al(n);
    Rat acc;
    for (const auto& [mono, c] : f.terms()) {
        Rat t = c;
        for (int l : al.letters(mono)) t *= m[static_cast<std::size_t>(l / n)][static_cast<std::size_t>(l % n)];
        acc += t;
    }
    return acc;
}

Verdict classical() {
    Verdict v;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
    int matrices = 0;
    for (int n : {2, 3}) {
        RationalField f(Rat(1));
        const auto h = detect_rank(check_closed(validate(f, builtin_permutation(f, n))));
        v.require(h.require_rank() == n, "perm rank != N");
        const auto td = trace_data(h);
        const auto cs = central_set(h, td);
        GradedIdeal<Rat> ideal(re_relations(h), n, f.one());

        // At q = 1 the relations are exactly the commutators of generators.
        const Alphabet al(n);
        const int a2 = n * n;
        v.require(static_cast<int>(ideal.component(2).rank()) == a2 * (a2 - 1) / 2, "degree-2 ideal is not the commutator span");
        for (int x = 0; x < a2; ++x)
            for (int y = x + 1; y < a2; ++y) {
                const auto gx = NCPoly<Rat>::generator(al, x / n + 1, x % n + 1, f.one());
                const auto gy = NCPoly<Rat>::generator(al, y / n + 1, y % n + 1, f.one());
                v.require(ideal.is_member(commutator(gx, gy)).member, "commutator missing from ideal");
            }
        for (int i = 1; i <= n; ++i) v.require(ideal.is_member(newton_defect(f, cs, i)).member, "classical Newton defect");
        const auto ch = cayley_hamilton_defect(f, cs, n);
        for (std::uint32_t a = 0; a < ch.size(); ++a)
            for (std::uint32_t b = 0; b < ch.size(); ++b) v.require(ideal.is_member(ch(a, b)).member, "classical CH defect");

        // Brute-force oracle on random rational matrices.
        for (int trial = 0; trial < 5; ++trial, ++matrices) {
            Mat m(static_cast<std::size_t>(n), std::vector<Rat>(static_cast<std::size_t>(n)));
            for (auto& row : m)
                for (auto& x : row) x = Rat(num(rng), den(rng));
            const auto e = elementary(m);
            std::vector<Rat> pw(static_cast<std::size_t>(n) + 1);
            Mat mk = m;
            for (int k = 1; k <= n; ++k) {
                for (int d = 0; d < n; ++d) pw[static_cast<std::size_t>(k)] += mk[static_cast<std::size_t>(d)][static_cast<std::size_t>(d)];
                mk = mat_mul(mk, m);
            }
            for (int k = 1; k <= n; ++k) {
                const auto ku = static_cast<std::size_t>(k);
                v.require(evaluate(cs.sigma[ku], m) == e[ku], "sigma(" + std::to_string(k) + ") != e_k");
                v.require(evaluate(cs.s[ku], m) == pw[ku], "s(" + std::to_string(k) + ") != p_k");
                v.require(evaluate(newton_defect(f, cs, k), m).is_zero(), "Newton defect nonzero at matrix");
                Rat rhs;
                for (int j = 1; j <= k; ++j) {
                    const Rat t = e[static_cast<std::size_t>(k - j)] * pw[static_cast<std::size_t>(j)];
                    rhs += j % 2 ? t : -t;
                }
                v.require(Rat(k) * e[ku] == rhs, "oracle Newton identity");
            }
            for (std::uint32_t a = 0; a < ch.size(); ++a)
                for (std::uint32_t b = 0; b < ch.size(); ++b)
                    v.require(evaluate(ch(a, b), m).is_zero(), "Cayley-Hamilton defect nonzero at matrix");
        }
    }
    if (v.ok) v.detail = "perm:2, perm:3 at q=1 match " + std::to_string(matrices) + " random rational matrices";
    return v;
}

// --- criterion 9 ---------------------------------------------------------

// True when some Newton, Cayley-Hamilton or characteristic-polynomial check
// fails against `ideal`, with R replaced by `r_override` in the invariants.
template <class Field>
bool detected(const HeckeSymmetry<Field>& h, const TraceData<typename Field::Scalar>& td,
              const GradedIdeal<typename Field::Scalar>& ideal, const TensorOperator<typename Field::Scalar>* r_override) {
    const auto& f = h.field();
    const int n = h.dim();
    const auto cs = central_set(h, td, r_override);
    for (int i = 1; i <= cs.p; ++i)
        if (!ideal.is_member(newton_defect(f, cs, i)).member) return true;
    const auto ch = cayley_hamilton_defect(f, cs, n);
    for (std::uint32_t a = 0; a < ch.size(); ++a)
        for (std::uint32_t b = 0; b < ch.size(); ++b)
            if (!ideal.is_member(ch(a, b)).member) return true;
    const auto cp = char_poly(h, td, r_override);
    for (int k = 0; k < cs.p; ++k) {
        auto expected = cs.sigma[static_cast<std::size_t>(cs.p - k)];
        if ((cs.p - k) % 2) expected = -expected;
        if (!ideal.is_member(cp.delta[static_cast<std::size_t>(k)] - expected).member) return true;
    }
    return eigen_relation_check(h, cp, ideal).has_value() || proportionality_check(cp, td, ideal).has_value();
}

template <class Field>
std::vector<NCPoly<typename Field::Scalar>> raw_relations(const Field& f, const TensorOperator<typename Field::Scalar>& r) {
    using S = typename Field::Scalar;
    const auto l1 = NCMatrix<S>::generator_matrix(r.dim(), 2, f.one());
    const auto diff = ((r * l1) * r) * l1 - ((l1 * r) * l1) * r;
    std::vector<NCPoly<S>> out;
    for (std::uint32_t i = 0; i < diff.size(); ++i)
        for (std::uint32_t j = 0; j < diff.size(); ++j)
            if (!diff(i, j).is_zero()) out.push_back(diff(i, j));
    return out;
}

struct DeletionCount {
    int total = 0, redundant = 0, detected = 0;
};

template <class Field>
DeletionCount deletions(const HeckeSymmetry<Field>& h, const TraceData<typename Field::Scalar>& td) {
    using S = typename Field::Scalar;
    const auto rels = re_relations(h);
    const std::size_t full_rank = GradedIdeal<S>(rels, h.dim(), h.field().one()).component(2).rank();
    DeletionCount dc;
    for (std::size_t k = 0; k < rels.size(); ++k) {
        auto rest = rels;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
        GradedIdeal<S> ideal(rest, h.dim(), h.field().one());
        ++dc.total;
        if (ideal.component(2).rank() == full_rank) {
            ++dc.redundant;
            continue;
        }
        dc.detected += detected(h, td, ideal, nullptr);
    }
    return dc;
}

Verdict sensitivity() {
    Verdict v;
    SymbolicField f;
    const int n = 2;
    const auto r = builtin_standard(f, n);
    const auto h = detect_rank(check_closed(validate(f, r)));
    const auto td = trace_data(h);

    v.require(!detected(h, td, GradedIdeal<QScalar>(re_relations(h), n, f.one()), nullptr), "genuine R flagged");

    int perturbed = 0, caught = 0;
    for (std::uint32_t i = 0; i < r.size(); ++i)
        for (const auto& [j, x] : r.row(i)) {
            auto bad = r;
            bad.set(i, j, x + f.one());
            const GradedIdeal<QScalar> ideal(raw_relations(f, bad), n, f.one());
            ++perturbed;
            const bool hit = detected(h, td, ideal, &bad);
            caught += hit;
            v.require(hit, "perturbation of entry " + r.space().label(i) + ";" + r.space().label(j) + " undetected");
        }

    const auto d2 = deletions(h, td);
    RationalField f3(Rat(2));
    const auto h3 = detect_rank(check_closed(validate(f3, builtin_standard(f3, 3))));
    const auto d3 = deletions(h3, trace_data(h3));
    v.require(d2.detected > 0 && d3.detected > 0, "no relation deletion detected");

    const std::string counts = "entries " + std::to_string(caught) + "/" + std::to_string(perturbed) +
                               "; deletions N=2 " + std::to_string(d2.detected) + "/" +
                               std::to_string(d2.total - d2.redundant) + " rank-reducing (" +
                               std::to_string(d2.redundant) + " redundant), N=3 q=2 " + std::to_string(d3.detected) +
                               "/" + std::to_string(d3.total - d3.redundant) + " (" + std::to_string(d3.redundant) +
                               " redundant)";
    v.detail = v.ok ? counts : v.detail + "; " + counts;
    return v;
}

// --- criterion 10 --------------------------------------------------------

Verdict determinism() {
    Verdict v;
    struct Case {
        cli::Command cmd;
        const char* builtin;
        const char* field;
    };
    const Case cases[] = {
        {cli::Command::charpoly, "std:3", "sampled:5"},
        {cli::Command::newton, "std:3", "modular:2305843009213693951:3"},
        {cli::Command::structure, "std:2", "symbolic"},
    };
    for (const auto& c : cases) {
        const auto a = cli::to_json(run_cli(c.cmd, c.builtin, c.field, 99), false).dump();
        const auto b = cli::to_json(run_cli(c.cmd, c.builtin, c.field, 99), false).dump();
        v.require(a == b, std::string("reports differ for ") + c.builtin + " " + c.field);
    }
    if (v.ok) v.detail = "3 command/field pairs byte-identical across runs";
    return v;
}

}  // namespace

int main() {
    std::printf("heckelab acceptance suite\n");
    report(1, "axioms N=2,3 symbolic", axioms_small, budget_axioms_small);
    report(1, "axioms N=4 modular", axioms_n4, budget_axioms_n4);
    report(2, "rank detection", rank, budget_rank);
    report(3, "structure identities", identities, budget_identities);
    report(4, "Newton relations", [] { return ideal_suite(cli::Command::newton, "newton.i", budget_symbolic_n2); },
           budget_sampled_n3);
    report(5, "Cayley-Hamilton", [] { return ideal_suite(cli::Command::cayley_hamilton, "cayley_hamilton.", budget_symbolic_n2); },
           budget_sampled_n3);
    report(6, "characteristic polynomial", charpoly, budget_charpoly);
    report(7, "centrality", centrality, budget_centrality);
    report(8, "classical limit", classical, budget_classical);
    report(9, "negative controls", sensitivity, budget_sensitivity);
    report(10, "determinism", determinism, budget_determinism);
    std::printf("%s: %d failing\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
