#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "heckelab/checks.hpp"
#include "heckelab/field.hpp"
#include "heckelab/hecke.hpp"
#include "heckelab/ideal.hpp"
#include "heckelab/invariants.hpp"
#include "heckelab/parallel.hpp"
#include "heckelab/rmatrix_io.hpp"

#ifndef HECKELAB_VERSION
#define HECKELAB_VERSION "0.0.0"
#endif

namespace heckelab::cli {

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

constexpr std::size_t witness_limit = 240;

enum class State { pass, fail, skip };

struct PointRecord {
    std::string name;
    State state = State::pass;
    std::string detail;
    std::string witness;
    double seconds = 0.0;
};

struct PointResult {
    std::string label;
    std::vector<PointRecord> records;
    json data = json::object();
};

class Recorder {
public:
    explicit Recorder(PointResult& out) : out_(out), mark_(Clock::now()) {}

    void add(std::string name, bool ok, std::string detail, std::string witness = {}) {
        push(std::move(name), ok ? State::pass : State::fail, std::move(detail), std::move(witness));
    }
    void skip(std::string name, std::string detail) { push(std::move(name), State::skip, std::move(detail), {}); }
    // Restarts the clock so that set-up work is charged to the next record.
    void lap() { mark_ = Clock::now(); }

private:
    void push(std::string name, State s, std::string detail, std::string witness) {
        const auto now = Clock::now();
        if (witness.size() > witness_limit) witness = witness.substr(0, witness_limit) + "...";
        out_.records.push_back({std::move(name), s, std::move(detail), std::move(witness),
                                std::chrono::duration<double>(now - mark_).count()});
        mark_ = now;
    }

    PointResult& out_;
    Clock::time_point mark_;
};

struct Source {
    std::string label;
    int n = 0;
    TensorOperator<QScalar> r;
    std::optional<Rat> pinned_q;  // q fixed by the source
};

int parse_dimension(const std::string& s) {
    try {
        std::size_t pos = 0;
        const int n = std::stoi(s, &pos);
        if (pos != s.size()) throw ArgumentError("");
        return n;
    } catch (const std::exception&) {
        throw ArgumentError("invalid dimension '" + s + "'");
    }
}

Source load_source(const RunConfig& cfg) {
    if (cfg.input.has_value() == cfg.builtin.has_value())
        throw ArgumentError("exactly one of --input and --builtin is required");
    Source src;
    if (cfg.input) {
        RMatrixFile file = load_rmatrix(*cfg.input);
        src.label = *cfg.input;
        src.n = file.dim;
        src.r = std::move(file.r);
        src.pinned_q = file.q;
        if (src.pinned_q) FieldSpec::evaluated(*src.pinned_q, true);
        return src;
    }
    std::string spec = *cfg.builtin;
    if (spec.rfind("builtin:", 0) == 0) spec = spec.substr(8);
    const auto colon = spec.find(':');
    if (colon == std::string::npos) throw ArgumentError("builtin must be std:N or perm:N");
    const std::string kind = spec.substr(0, colon);
    src.n = parse_dimension(spec.substr(colon + 1));
    src.label = "builtin:" + spec;
    if (kind == "std") {
        src.r = builtin_standard(SymbolicField{}, src.n);
    } else if (kind == "perm") {
        src.r = builtin_permutation(SymbolicField{}, src.n);
        src.pinned_q = Rat(1);
    } else {
        throw ArgumentError("unknown builtin '" + kind + "'");
    }
    return src;
}

struct Strategy {
    enum class Kind { symbolic, sampled, modular } kind = Kind::symbolic;
    int samples = 1;
    std::uint64_t prime = FieldSpec::default_prime;
};

std::uint64_t parse_u64(const std::string& s, const char* what) {
    try {
        std::size_t pos = 0;
        if (s.empty() || s[0] == '-') throw ArgumentError("");
        const auto v = std::stoull(s, &pos);
        if (pos != s.size()) throw ArgumentError("");
        return v;
    } catch (const std::exception&) {
        throw ArgumentError(std::string("invalid ") + what + " '" + s + "'");
    }
}

Strategy parse_strategy(const std::string& text, int n) {
    Strategy st;
    std::string t = text;
    if (t == "auto") t = n <= 2 ? "symbolic" : n == 3 ? "sampled:5" : "modular:" + std::to_string(FieldSpec::default_prime);
    std::vector<std::string> parts;
    std::stringstream ss(t);
    for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
    if (parts.empty()) throw ArgumentError("empty field strategy");
    if (parts[0] == "symbolic" && parts.size() == 1) {
        st.kind = Strategy::Kind::symbolic;
    } else if (parts[0] == "sampled" && parts.size() <= 2) {
        st.kind = Strategy::Kind::sampled;
        st.samples = parts.size() == 2 ? static_cast<int>(parse_u64(parts[1], "sample count")) : 5;
    } else if (parts[0] == "modular" && parts.size() <= 3) {
        st.kind = Strategy::Kind::modular;
        if (parts.size() >= 2) st.prime = parse_u64(parts[1], "prime");
        st.samples = parts.size() == 3 ? static_cast<int>(parse_u64(parts[2], "sample count")) : 5;
        FieldSpec::modular(st.prime, 2).check_dimension(n);
    } else {
        throw ArgumentError("unknown field strategy '" + text + "'");
    }
    if (st.samples < 1 || st.samples > 64) throw ArgumentError("sample count must be in [1, 64]");
    return st;
}

template <class S>
std::string format_poly(const NCPoly<S>& p) {
    return p.str(Alphabet(p.n() ? p.n() : 1), [](const S& c) { return c.str(); });
}

template <class Field>
json operator_json(const Field& f, const TensorOperator<typename Field::Scalar>& a) {
    json rows = json::array();
    for (std::uint32_t i = 0; i < a.size(); ++i) {
        json row = json::array();
        for (std::uint32_t j = 0; j < a.size(); ++j) row.push_back(f.format(a.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <class Field, class Tensor>
json tensor_json(const Field& f, const Tensor& t) {
    const IndexSpace sp(t.dim, t.rank);
    json out = json::object();
    for (std::size_t i = 0; i < t.entries.size(); ++i)
        if (!is_zero(t.entries[i])) out[sp.label(static_cast<std::uint32_t>(i))] = f.format(t.entries[i]);
    return out;
}

template <class S>
void record_membership(Recorder& rec, const std::string& name, const GradedIdeal<S>& ideal, const NCPoly<S>& defect,
                       const std::string& what) {
    try {
        const long d = defect.homogeneous_degree();
        const auto m = ideal.is_member(defect);
        std::string detail = what;
        if (d >= 2) detail += ", degree-" + std::to_string(d) + " ideal of rank " + std::to_string(ideal.component(static_cast<std::uint32_t>(d)).rank());
        else detail += d == -1 ? ", defect is identically zero" : ", degree " + std::to_string(d) + " (ideal is zero here)";
        rec.add(name, m.member, detail, m.member ? std::string() : "residual " + format_poly(m.residual));
    } catch (const ResourceError& e) {
        rec.skip(name, e.what());
    }
}

template <class Field>
void run_point(Command cmd, const Field& f, const Source& src, const RunConfig& cfg, PointResult& out) {
    using S = typename Field::Scalar;
    Recorder rec(out);
    const auto r = src.r.map_entries([&](const QScalar& x) { return f.convert(x); });
    const int n = src.n;

    const auto ybe = check_yang_baxter(f, r);
    rec.add("axiom.yang_baxter", ybe.passed, "R12 R23 R12 = R23 R12 R23",
            ybe.passed ? std::string() : "entry " + ybe.location + " residual " + ybe.residual);
    const auto hk = check_hecke(f, r);
    rec.add("axiom.hecke", hk.passed, "R^2 = I + lambda R",
            hk.passed ? std::string() : "entry " + hk.location + " residual " + hk.residual);
    if (!ybe.passed || !hk.passed) return;

    HeckeSymmetry<Field> h = validate(f, r);
    out.data["lambda"] = f.format(h.lambda());
    try {
        h = check_closed(h);
        rec.add("axiom.closed", true, "(P R)^t1 is invertible");
    } catch (const NotClosed& e) {
        rec.add("axiom.closed", false, e.what());
        return;
    }
    if (cmd == Command::validate) return;

    try {
        h = detect_rank(h, cfg.rank_bound);
    } catch (const Error& e) {
        rec.add("rank.detect", false, e.what());
        return;
    }
    const int p = *h.rank();
    out.data["rank"] = p;
    if (cmd == Command::rank) {
        rec.add("rank.detect", true, "p = " + std::to_string(p) + " (bound " + std::to_string(cfg.rank_bound) + ")");
        const auto& chain = h.antisymmetrizers();
        const S top = trace_full(chain[static_cast<std::size_t>(p - 1)]);
        const S next = trace_full(chain[static_cast<std::size_t>(p)]);
        rec.add("rank.top_dimension", top == f.one() && is_zero(next),
                "Tr P^" + std::to_string(p) + " = " + f.format(top) + ", Tr P^" + std::to_string(p + 1) + " = " + f.format(next));
        for (auto& c : antisymmetrizer_checks(h)) rec.add(c.name, c.passed, c.detail);
        return;
    }

    std::optional<TraceData<S>> td;
    try {
        td = trace_data(h);
    } catch (const Error& e) {
        rec.add("trace.data", false, e.what());
        return;
    }
    if (cmd == Command::structure) {
        out.data["u"] = tensor_json(f, td->u);
        out.data["v"] = tensor_json(f, td->v);
        out.data["C"] = operator_json(f, td->C);
        out.data["B"] = operator_json(f, td->B);
        out.data["trace_C"] = f.format(trace_full(td->C));
        rec.lap();
        for (auto& c : structure_checks(h, *td, cfg.seed)) rec.add(c.name, c.passed, c.detail);
        return;
    }

    GradedIdeal<S> ideal(re_relations(h), n, f.one());
    out.data["relations"] = ideal.relations().size();
    std::optional<CentralSet<S>> cs;
    try {
        cs = central_set(h, *td);
        rec.add("alpha.recurrence", true, "closed form equals recurrence for i <= " + std::to_string(p));
    } catch (const Error& e) {
        rec.add("alpha.recurrence", false, e.what());
        return;
    }
    rec.lap();

    if (cmd == Command::newton) {
        for (int i = 1; i <= p; ++i)
            record_membership(rec, "newton.i" + std::to_string(i), ideal, newton_defect(f, *cs, i),
                              "order " + std::to_string(i));
        return;
    }
    if (cmd == Command::cayley_hamilton) {
        const auto ch = cayley_hamilton_defect(f, *cs, n);
        for (std::uint32_t a = 0; a < ch.size(); ++a)
            for (std::uint32_t b = 0; b < ch.size(); ++b)
                record_membership(rec, "cayley_hamilton.L(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")", ideal,
                                  ch(a, b), "entry");
        return;
    }

    // charpoly
    const auto cp = char_poly(h, *td);
    json coeffs = json::object();
    for (int k = 0; k <= p; ++k) coeffs["x^" + std::to_string(k)] = format_poly(cp.delta[static_cast<std::size_t>(k)]);
    out.data["delta"] = std::move(coeffs);
    const S lead = (p % 2) ? -f.one() : f.one();
    rec.add("charpoly.leading", cp.delta[static_cast<std::size_t>(p)] == NCPoly<S>::constant(n, lead),
            "coefficient of x^" + std::to_string(p) + " is " + f.format(lead),
            "found " + format_poly(cp.delta[static_cast<std::size_t>(p)]));
    for (int k = 0; k < p; ++k) {
        auto expected = cs->sigma[static_cast<std::size_t>(p - k)];
        if (k % 2) expected = -expected;
        record_membership(rec, "charpoly.x^" + std::to_string(k), ideal, cp.delta[static_cast<std::size_t>(k)] - expected,
                          "coefficient minus (-1)^" + std::to_string(k) + " sigma(" + std::to_string(p - k) + ")");
    }
    try {
        const auto fail = eigen_relation_check(h, cp, ideal);
        rec.add("charpoly.eigen_relation", !fail, "(R_i + 1/q) w(x) lies in the ideal for i < p, all x-powers",
                fail ? "i=" + std::to_string(fail->i) + ", x^" + std::to_string(fail->x_power) + ", entry " + fail->entry : std::string());
        const auto prop = proportionality_check(cp, *td, ideal);
        rec.add("charpoly.proportional", !prop, "w(x) = Delta(x) u modulo the ideal",
                prop ? "x^" + std::to_string(prop->first) + ", entry " + prop->second : std::string());
    } catch (const ResourceError& e) {
        rec.skip("charpoly.eigen_relation", e.what());
        rec.skip("charpoly.proportional", e.what());
    }
}

std::vector<Rat> sample_rationals(int k, std::mt19937_64& rng, const TensorOperator<QScalar>& r) {
    std::vector<Rat> pool;
    for (int a = 2; a <= 7; ++a)
        for (int b = 2; b <= 7; ++b) {
            if (a == b) continue;
            const Rat x(a, b);
            if (std::find(pool.begin(), pool.end(), x) == pool.end()) pool.push_back(x);
        }
    std::vector<Rat> out;
    std::set<std::size_t> tried;
    std::uniform_int_distribution<std::size_t> pick(2, 7);
    while (static_cast<int>(out.size()) < k) {
        if (tried.size() == pool.size()) throw ArgumentError("not enough admissible rational sample points");
        const Rat x(static_cast<long>(pick(rng)), static_cast<long>(pick(rng)));
        auto it = std::find(pool.begin(), pool.end(), x);
        if (it == pool.end()) continue;
        if (!tried.insert(static_cast<std::size_t>(it - pool.begin())).second) continue;
        try {
            r.map_entries([&](const QScalar& s) { return specialize(s, x); });
        } catch (const SpecializationError&) {
            continue;
        }
        out.push_back(x);
    }
    return out;
}

std::vector<std::uint64_t> sample_residues(int k, std::uint64_t prime, int order_limit, std::mt19937_64& rng,
                                           const TensorOperator<QScalar>& r) {
    std::vector<std::uint64_t> out;
    std::uniform_int_distribution<std::uint64_t> pick(2, prime - 2);
    for (int attempts = 0; static_cast<int>(out.size()) < k; ++attempts) {
        if (attempts > 1000 * k) throw ArgumentError("could not draw admissible residues modulo " + std::to_string(prime));
        const std::uint64_t x = pick(rng);
        if (std::find(out.begin(), out.end(), x) != out.end()) continue;
        if (small_order(x, prime, static_cast<std::uint64_t>(order_limit)) != 0) continue;
        try {
            r.map_entries([&](const QScalar& s) { return specialize(s, prime, x); });
        } catch (const SpecializationError&) {
            continue;
        }
        out.push_back(x);
    }
    return out;
}

}  // namespace

Command parse_command(const std::string& name) {
    static const std::map<std::string, Command> table = {
        {"validate", Command::validate},   {"rank", Command::rank},
        {"structure", Command::structure}, {"newton", Command::newton},
        {"cayley-hamilton", Command::cayley_hamilton}, {"charpoly", Command::charpoly},
    };
    auto it = table.find(name);
    if (it == table.end()) throw ArgumentError("unknown command '" + name + "'");
    return it->second;
}

std::string command_name(Command c) {
    switch (c) {
        case Command::validate: return "validate";
        case Command::rank: return "rank";
        case Command::structure: return "structure";
        case Command::newton: return "newton";
        case Command::cayley_hamilton: return "cayley-hamilton";
        case Command::charpoly: return "charpoly";
    }
    return {};
}

std::string status_name(Status s) {
    switch (s) {
        case Status::proved: return "proved";
        case Status::verified: return "verified-at-k-points";
        case Status::failed: return "failed";
        case Status::skipped: return "skipped";
    }
    return {};
}

bool Report::failed() const {
    return std::any_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.status == Status::failed; });
}

Report run(const RunConfig& cfg) {
    const auto start = Clock::now();
    if (cfg.rank_bound < 1 || cfg.rank_bound > 16) throw ArgumentError("rank bound must be in [1, 16]");
    const Source src = load_source(cfg);
    const Strategy st = parse_strategy(cfg.field, src.n);

    Report report;
    report.version = HECKELAB_VERSION;
    report.config = cfg;
    std::mt19937_64 rng(cfg.seed);
    std::vector<PointResult> results;
    bool exact = false;

    if (src.pinned_q && st.kind != Strategy::Kind::modular) {
        exact = true;
        results.resize(1);
        results[0].label = "q=" + src.pinned_q->str();
        report.field_description = "Q, q=" + src.pinned_q->str();
        run_point(cfg.command, RationalField(*src.pinned_q), src, cfg, results[0]);
    } else if (src.pinned_q) {
        const std::uint64_t q0 = modarith::reduce(*src.pinned_q, st.prime);
        FieldSpec::modular(st.prime, q0, true);
        results.resize(1);
        results[0].label = "q=" + std::to_string(q0) + " mod " + std::to_string(st.prime);
        report.field_description = "Z/" + std::to_string(st.prime) + ", q=" + std::to_string(q0);
        run_point(cfg.command, ModularField(st.prime, q0), src, cfg, results[0]);
    } else if (st.kind == Strategy::Kind::symbolic) {
        exact = true;
        results.resize(1);
        results[0].label = "q=symbolic";
        report.field_description = "Q(q)";
        run_point(cfg.command, SymbolicField{}, src, cfg, results[0]);
    } else if (st.kind == Strategy::Kind::sampled) {
        const auto qs = sample_rationals(st.samples, rng, src.r);
        results.resize(qs.size());
        for (std::size_t i = 0; i < qs.size(); ++i) results[i].label = "q=" + qs[i].str();
        report.field_description = "Q at " + std::to_string(qs.size()) + " sampled q";
        parallel_for(qs.size(), [&](std::size_t i) { run_point(cfg.command, RationalField(qs[i]), src, cfg, results[i]); });
    } else {
        const auto qs = sample_residues(st.samples, st.prime, 2 * cfg.rank_bound, rng, src.r);
        results.resize(qs.size());
        for (std::size_t i = 0; i < qs.size(); ++i) results[i].label = "q=" + std::to_string(qs[i]) + " mod " + std::to_string(st.prime);
        report.field_description = "Z/" + std::to_string(st.prime) + " at " + std::to_string(qs.size()) + " sampled q";
        parallel_for(qs.size(), [&](std::size_t i) { run_point(cfg.command, ModularField(st.prime, qs[i]), src, cfg, results[i]); });
    }

    std::map<std::string, CheckRecord> merged;
    std::map<std::string, int> skips;
    report.data = json::object();
    for (const auto& pr : results) {
        report.points.push_back(pr.label);
        report.data[pr.label] = pr.data;
        for (const auto& r : pr.records) {
            auto [it, fresh] = merged.try_emplace(r.name);
            CheckRecord& c = it->second;
            if (fresh) {
                c.name = r.name;
                c.status = Status::skipped;
                c.detail = r.detail;
            }
            c.seconds += r.seconds;
            if (c.status == Status::failed) continue;
            if (r.state == State::fail) {
                c.status = Status::failed;
                c.detail = pr.label + ": " + r.detail;
                c.witness = r.witness;
            } else if (r.state == State::pass) {
                c.status = Status::verified;
                c.detail = r.detail;
                ++c.points;
            } else {
                ++skips[r.name];
                if (c.points == 0) c.detail = r.detail;
            }
        }
    }
    for (auto& [name, c] : merged) {
        if (c.status == Status::verified && exact && c.points == 1) c.status = Status::proved;
        if (c.status == Status::verified && skips[name] > 0) c.detail += " (skipped at " + std::to_string(skips[name]) + " points)";
        report.checks.push_back(std::move(c));
    }
    report.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return report;
}

json to_json(const Report& r, bool include_timings) {
    json j;
    j["schema"] = 1;
    j["tool"] = "hecke-lab";
    j["version"] = r.version;
    j["config"] = {
        {"command", command_name(r.config.command)},
        {"source", r.config.input ? *r.config.input : "builtin:" + *r.config.builtin},
        {"field", r.config.field},
        {"seed", r.config.seed},
        {"rank_bound", r.config.rank_bound},
    };
    j["field"] = r.field_description;
    j["points"] = r.points;
    json checks = json::array();
    int passed = 0, failed = 0, skipped = 0;
    for (const auto& c : r.checks) {
        json e;
        e["name"] = c.name;
        e["status"] = status_name(c.status);
        e["points"] = c.points;
        e["detail"] = c.detail;
        if (!c.witness.empty()) e["witness"] = c.witness;
        checks.push_back(std::move(e));
        if (c.status == Status::failed) ++failed;
        else if (c.status == Status::skipped) ++skipped;
        else ++passed;
    }
    j["checks"] = std::move(checks);
    j["summary"] = {{"passed", passed}, {"failed", failed}, {"skipped", skipped}, {"result", r.failed() ? "fail" : "pass"}};
    j["data"] = r.data;
    if (include_timings) {
        json t = json::object();
        for (const auto& c : r.checks) t[c.name] = c.seconds;
        j["timings"] = {{"total_seconds", r.seconds}, {"checks", std::move(t)}};
    }
    return j;
}

std::string to_text(const Report& r) {
    std::ostringstream os;
    os << "hecke-lab " << r.version << "  " << command_name(r.config.command) << "  source="
       << (r.config.input ? *r.config.input : "builtin:" + *r.config.builtin) << "  field=" << r.field_description
       << "  seed=" << r.config.seed << "\n";
    int failed = 0, skipped = 0;
    for (const auto& c : r.checks) {
        std::string status = status_name(c.status);
        if (c.status == Status::verified) status = "verified at " + std::to_string(c.points) + " points";
        os << "[" << status << "] " << c.name << ": " << c.detail << "\n";
        if (!c.witness.empty()) os << "    witness: " << c.witness << "\n";
        if (c.status == Status::failed) ++failed;
        if (c.status == Status::skipped) ++skipped;
    }
    for (const auto& [label, data] : r.data.items()) {
        for (const auto& [key, value] : data.items()) {
            os << "  " << label << "  " << key << " = ";
            if (value.is_string()) os << value.get<std::string>();
            else os << value.dump();
            os << "\n";
        }
    }
    os << "result: " << (failed ? "fail" : "pass") << " (" << r.checks.size() << " checks, " << failed << " failed, " << skipped
       << " skipped, " << r.seconds << " s)\n";
    return os.str();
}

}  // namespace heckelab::cli
