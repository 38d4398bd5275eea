#include <bergekit/acceptance.hpp>
#include <bergekit/classifier.hpp>
#include <bergekit/constructions.hpp>
#include <bergekit/containment.hpp>
#include <bergekit/matrix_io.hpp>
#include <bergekit/named.hpp>
#include <bergekit/oracle/naive.hpp>
#include <bergekit/transform.hpp>

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

namespace bergekit {

namespace {

using Clock = std::chrono::steady_clock;

struct Tally {
    int checked = 0;
    int failed = 0;
    std::ostringstream first_failure;

    void expect(bool ok, const std::string& what) {
        ++checked;
        if (!ok && failed++ == 0) {
            first_failure << what;
        }
    }
    void finish(CriterionResult& r, const std::string& summary) const {
        r.passed = failed == 0;
        r.detail = summary + " (" + std::to_string(checked - failed) + "/" + std::to_string(checked) + " ok)";
        if (failed) {
            r.detail += "; first failure: " + first_failure.str();
        }
    }
};

std::string value_line(const std::string& what, int m, int got, const std::string& relation, int want) {
    return what + " m=" + std::to_string(m) + ": " + std::to_string(got) + " " + relation + " " + std::to_string(want);
}

int g1_formula(int m) { return 3 * m / 2 + 1; }
int h8_formula(int m) { return 2 * m; }
int h2_formula(int m) { return 4 * (m / 3) + m + 1; }

BitMatrix random_matrix(std::mt19937_64& rng, int rows, int cols) {
    std::uniform_int_distribution<Column> bits(0, low_rows(rows));
    std::vector<Column> c(static_cast<std::size_t>(cols));
    for (auto& x : c) {
        x = bits(rng);
    }
    return BitMatrix(rows, std::move(c));
}

BitMatrix random_simple(std::mt19937_64& rng, int rows) {
    const int universe = 1 << rows;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double density = unit(rng);
    std::vector<Column> c;
    for (int s = 0; s < universe; ++s) {
        if (unit(rng) < density) {
            c.push_back(static_cast<Column>(s));
        }
    }
    std::shuffle(c.begin(), c.end(), rng);
    return BitMatrix(rows, std::move(c));
}

int pick(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

CriterionResult criterion_ik(const AcceptanceConfig& config) {
    CriterionResult r;
    Tally tally;
    const auto start = Clock::now();
    for (int k = 2; k <= 4; ++k) {
        for (int m = k; m <= kDownsetMaxRows; ++m) {
            const int got = solve_bh(identity(k), m, config.solve).value;
            tally.expect(got == 1 << (k - 1), value_line("I_" + std::to_string(k), m, got, "vs", 1 << (k - 1)));
        }
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    tally.expect(seconds < 300, "runtime " + std::to_string(seconds) + "s");
    tally.finish(r, "Bh(m,I_k) = 2^{k-1} for k=2..4, m=k..6");
    return r;
}

CriterionResult criterion_exact(const BitMatrix& f, const std::string& name, int lo, const std::function<int(int)>& want,
                                const AcceptanceConfig& config) {
    CriterionResult r;
    Tally tally;
    std::string values;
    for (int m = lo; m <= kDownsetMaxRows; ++m) {
        const SolveResult res = solve_bh(f, m, config.solve);
        values += (values.empty() ? "" : ",") + std::to_string(res.value);
        tally.expect(res.value == want(m),
                     value_line(name, m, res.value, "vs", want(m)) + ", witness " + to_literal(res.witness));
    }
    tally.finish(r, name + " values " + values);
    return r;
}

CriterionResult criterion_h2(const AcceptanceConfig& config) {
    CriterionResult r;
    Tally tally;
    const BitMatrix h2 = h_matrix(2);
    std::string values;
    for (int m = 4; m <= 6; ++m) {
        const SolveResult res = solve_bh(h2, m, config.solve);
        const int got = res.value;
        values += (values.empty() ? "" : ",") + std::to_string(got);
        tally.expect(got <= h2_formula(m),
                     value_line("H_2", m, got, "<=", h2_formula(m)) + ", witness " + to_literal(res.witness));
        if (m == 6) {
            tally.expect(got == h2_formula(m), value_line("H_2", m, got, "==", h2_formula(m)));
        }
    }
    const BitMatrix w = h2_extremal(6);
    tally.expect(w.cols() == 15 && is_simple(w), "construction has " + std::to_string(w.cols()) + " columns");
    tally.expect(!berge_contains(h2, w), "construction contains H_2");
    tally.finish(r, "H_2 values " + values + ", construction 15 columns");
    return r;
}

CriterionResult criterion_oracle(const AcceptanceConfig& config) {
    CriterionResult r;
    Tally tally;
    const auto corpus = enumerate_simple_matrices(3, 3);
    for (const auto& f : corpus) {
        for (int m = 3; m <= 4; ++m) {
            const int fast = solve_bh(f, m, config.solve).value;
            const int slow = solve_bh_unrestricted(f, m).value;
            tally.expect(fast == slow, to_literal(f) + value_line("", m, fast, "vs", slow));
        }
    }
    tally.finish(r, std::to_string(corpus.size()) + " matrices at m=3,4");
    return r;
}

CriterionResult criterion_family(const AcceptanceConfig& config) {
    CriterionResult r;
    Tally tally;
    for (const char* literal : {"10,01", "11", "10,11"}) {
        const BitMatrix f = parse_literal(literal);
        const auto family = berge_family(f);
        for (int m = 2; m <= 4; ++m) {
            const int bh = solve_bh(f, m, config.solve).value;
            const int forb = solve_forb_family(family, m).value;
            tally.expect(bh == forb, std::string(literal) + value_line("", m, bh, "vs", forb));
        }
    }
    tally.finish(r, "Bh(m,F) = forb(m,B(F)) for F in {I_2, 1_2, [10,11]}, m=2..4");
    return r;
}

CriterionResult criterion_shifting(const AcceptanceConfig& config) {
    CriterionResult r;
    Tally tally;
    std::mt19937_64 rng(config.seed);
    int avoiding = 0;
    for (int i = 0; i < 1000; ++i) {
        const BitMatrix a = random_simple(rng, pick(rng, 1, 6));
        const BitMatrix f = random_matrix(rng, pick(rng, 1, 3), pick(rng, 1, 3));
        const BitMatrix t = shift_fixpoint(a).members();
        const std::string tag = "instance " + std::to_string(i) + " A=" + to_literal(a) + " F=" + to_literal(f);
        tally.expect(t.cols() == a.cols() && t.rows() == a.rows(), tag + ": size changed");
        tally.expect(is_simple(t), tag + ": not simple");
        tally.expect(is_downset(t), tag + ": not a downset");
        if (!berge_contains(f, a)) {
            ++avoiding;
            tally.expect(!berge_contains(f, t), tag + ": avoidance lost");
        }
    }
    tally.finish(r, "1000 random pairs, " + std::to_string(avoiding) + " with F avoided");
    return r;
}

CriterionResult criterion_containment(const AcceptanceConfig& config) {
    CriterionResult r;
    Tally tally;
    std::mt19937_64 rng(config.seed ^ 0x5eedULL);
    int present = 0;
    for (int i = 0; i < 1000; ++i) {
        const BitMatrix f = random_matrix(rng, pick(rng, 1, 3), pick(rng, 1, 4));
        const BitMatrix a = random_matrix(rng, pick(rng, 1, 5), pick(rng, 1, 6));
        const std::string tag = "instance " + std::to_string(i) + " F=" + to_literal(f) + " A=" + to_literal(a);
        for (ContainMode mode : {ContainMode::Berge, ContainMode::Configuration}) {
            const auto fast = find_embedding(f, a, mode);
            const bool slow = oracle::naive_contains(f, a, mode);
            present += slow;
            tally.expect(fast.has_value() == slow, tag + (mode == ContainMode::Berge ? " (berge)" : " (config)"));
            if (fast) {
                tally.expect(verify_embedding(f, a, *fast, mode), tag + ": invalid witness");
            }
        }
    }
    tally.finish(r, "1000 random instances in both modes, " + std::to_string(present) + " positive");
    return r;
}

CriterionResult criterion_rowsum(const AcceptanceConfig& config) {
    CriterionResult r;
    Tally tally;
    std::mt19937_64 rng(config.seed ^ 0x20e5ULL);
    for (int i = 0; i < 500; ++i) {
        const int k = pick(rng, 1, 4);
        const int t = pick(rng, 1, 3);
        const int n = k * t + pick(rng, 0, 3);
        BitMatrix a = random_matrix(rng, k, n);
        std::vector<Column> cols(a.columns().begin(), a.columns().end());
        for (int row = 0; row < k; ++row) {
            int sum = 0;
            for (Column c : cols) {
                sum += (c >> row) & 1U;
            }
            while (sum < k * t) {
                auto& c = cols[static_cast<std::size_t>(pick(rng, 0, n - 1))];
                if (!((c >> row) & 1U)) {
                    c |= row_bit(row);
                    ++sum;
                }
            }
        }
        a = BitMatrix(k, std::move(cols));
        tally.expect(contains_t_fold(identity(k), t, a),
                     "k=" + std::to_string(k) + " t=" + std::to_string(t) + " A=" + to_literal(a));
    }
    tally.finish(r, "500 random matrices with row sums >= kt contain t·I_k");
    return r;
}

struct Labelled {
    const char* label;
    BitMatrix matrix;
    Rational exponent;
};

std::vector<Labelled> labelled_representatives() {
    const auto named = [](const char* name) { return *lookup_named(name); };
    return {
        {"I_3", identity(3), {0, 1}},
        {"[I_3|0_3]", parse_literal("100,010,001,000"), {0, 1}},
        {"[000]", parse_literal("000"), {0, 1}},
        {"I_4", identity(4), {0, 1}},
        {"G_1", g1(), {1, 1}},
        {"[110,001]", parse_literal("110,001"), {1, 1}},
        {"[100,100]", parse_literal("100,100"), {1, 1}},
        {"[110]", parse_literal("110"), {1, 1}},
        {"H_1", h_matrix(1), {1, 1}},
        {"H_2", h_matrix(2), {1, 1}},
        {"H_8", h_matrix(8), {1, 1}},
        {"G_2", g2(), {2, 1}},
        {"1_3", ones_column(3), {2, 1}},
        {"[111,110]", parse_literal("111,110"), {2, 1}},
        {"[111,100]", parse_literal("111,100"), {2, 1}},
        {"[110,110]", parse_literal("110,110"), {2, 1}},
        {"H_3", h_matrix(3), {2, 1}},
        {"C_4", c4(), {3, 2}},
        {"2·1_3", named("2*1_3"), {3, 1}},
        {"K_4^2", named("K4^2"), {3, 1}},
        {"H_5", h_matrix(5), {3, 1}},
        {"H_6", h_matrix(6), {3, 1}},
        {"H_7", h_matrix(7), {3, 1}},
        {"1_4", ones_column(4), {3, 1}},
        {"2·1_4", repeat(ones_column(4), 2), {4, 1}},
    };
}

CriterionResult criterion_classifier(const AcceptanceConfig&) {
    CriterionResult r;
    Tally tally;
    const CorpusReport k3 = classify_corpus(3, 4);
    const CorpusReport k4 = classify_corpus(4, 4);
    int matched = 0;
    for (const auto& rep : labelled_representatives()) {
        const CorpusReport& report = rep.matrix.rows() == 3 ? k3 : k4;
        const CorpusEntry* entry = report.find(rep.matrix);
        const bool ok = entry && entry->cls.exponent() == rep.exponent && entry->witness_ok;
        matched += ok;
        tally.expect(ok, std::string(rep.label) + (entry ? " classified " + entry->cls.label() : " missing from corpus"));
    }
    int subquadratic = 0;
    for (const CorpusReport* report : {&k3, &k4}) {
        for (const auto& e : report->entries) {
            tally.expect(e.witness_ok && e.constant_ok != false, to_literal(e.matrix) + " failed a cross-check");
            if (report == &k3 && e.origin == "enumerated") {
                const int num = e.cls.exponent().num;
                tally.expect(e.cls.exponent().den == 1 && num <= 2, to_literal(e.matrix) + " above quadratic");
            }
            if (report == &k4 && e.cls.exponent() == Rational{3, 2}) {
                ++subquadratic;
            }
        }
    }
    tally.expect(subquadratic == 1, std::to_string(subquadratic) + " subquadratic classes for k=4");
    tally.finish(r, std::to_string(matched) + "/25 representatives; corpora of " + std::to_string(k3.entries.size()) +
                        " and " + std::to_string(k4.entries.size()) + " matrices");
    return r;
}

CriterionResult criterion_conditional(const AcceptanceConfig&) {
    CriterionResult r;
    Tally tally;
    const auto cites_conjecture = [](const AsymptoticClass& c) {
        return std::any_of(c.rules.begin(), c.rules.end(), [](const Rule& rule) { return rule.anchor == "conjC4"; });
    };
    const AsymptoticClass wheel = classify_bh(*lookup_named("1x1C4"));
    tally.expect(wheel.exponent() == Rational{2, 1}, "1_1×C_4 classified " + wheel.label());
    tally.expect(wheel.conditional && cites_conjecture(wheel), "1_1×C_4 not flagged conditional");
    const AsymptoticClass h = classify_bh(make_H(2, 5, 1));
    tally.expect(h.exponent() == Rational{2, 1}, "H(2,5,1) classified " + h.label());
    tally.expect(!h.conditional && !cites_conjecture(h), "H(2,5,1) flagged conditional");
    tally.finish(r, "1_1×C_4 " + wheel.label() + (wheel.conditional ? " conditional" : "") + ", H(2,5,1) " +
                        h.label() + (h.conditional ? " conditional" : ""));
    return r;
}

CriterionResult criterion_monotonicity(const AcceptanceConfig& config) {
    CriterionResult r;
    Tally tally;
    for (const auto& entry : catalog()) {
        int previous = 0;
        for (int m = 1; m <= kDownsetMaxRows; ++m) {
            const int got = solve_bh(entry.matrix, m, config.solve).value;
            tally.expect(got >= previous, value_line(entry.name, m, got, "<", previous));
            previous = got;
        }
    }
    tally.finish(r, std::to_string(catalog().size()) + " catalog matrices over m=1..6");
    return r;
}

struct Criterion {
    const char* key;
    const char* title;
    std::function<CriterionResult(const AcceptanceConfig&)> run;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all{
        {"ik", "identity exact values", criterion_ik},
        {"g1", "G_1 exact values",
         [](const AcceptanceConfig& c) { return criterion_exact(g1(), "G_1", 3, g1_formula, c); }},
        {"h8", "H_8 exact values",
         [](const AcceptanceConfig& c) { return criterion_exact(h_matrix(8), "H_8", 4, h8_formula, c); }},
        {"h2", "H_2 bound and construction", criterion_h2},
        {"oracle", "downset solver vs unrestricted search", criterion_oracle},
        {"family", "Berge family bridge", criterion_family},
        {"shifting", "shifting properties", criterion_shifting},
        {"containment", "containment vs naive oracle", criterion_containment},
        {"rowsum", "row sums force t·I_k", criterion_rowsum},
        {"classifier", "classifier conformance", criterion_classifier},
        {"conditional", "conditional flagging", criterion_conditional},
        {"monotonicity", "monotonicity in m", criterion_monotonicity},
    };
    return all;
}

}  // namespace

const std::vector<std::string>& criterion_keys() {
    static const std::vector<std::string> keys = [] {
        std::vector<std::string> k;
        for (const auto& c : criteria()) {
            k.emplace_back(c.key);
        }
        return k;
    }();
    return keys;
}

CriterionResult run_criterion(const std::string& key, const AcceptanceConfig& config) {
    const auto& all = criteria();
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (key == all[i].key) {
            const auto start = Clock::now();
            CriterionResult r;
            try {
                r = all[i].run(config);
            } catch (const std::exception& e) {
                r.passed = false;
                r.detail = std::string("error: ") + e.what();
            }
            r.id = static_cast<int>(i) + 1;
            r.key = all[i].key;
            r.title = all[i].title;
            r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
            return r;
        }
    }
    throw Error("unknown acceptance item '" + key + "'");
}

std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& config) {
    std::vector<CriterionResult> out;
    for (const auto& key : criterion_keys()) {
        out.push_back(run_criterion(key, config));
    }
    return out;
}

CriterionResult check_formula(const std::string& key, std::optional<int> k, int m, const AcceptanceConfig& config) {
    BitMatrix f;
    int want = 0;
    bool upper_only = false;
    if (key == "ik") {
        if (!k) {
            throw Error("item ik needs --k");
        }
        f = identity(*k);
        want = 1 << (*k - 1);
    } else if (key == "g1") {
        f = g1();
        want = g1_formula(m);
    } else if (key == "h8") {
        f = h_matrix(8);
        want = h8_formula(m);
    } else if (key == "h2") {
        f = h_matrix(2);
        want = h2_formula(m);
        upper_only = m != 6;
    } else {
        throw Error("item '" + key + "' has no single-value form");
    }
    CriterionResult r;
    r.key = key;
    r.title = "single value";
    const auto start = Clock::now();
    const int got = solve_bh(f, m, config.solve).value;
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    r.passed = upper_only ? got <= want : got == want;
    r.detail = value_line(key == "ik" ? "I_" + std::to_string(*k) : key, m, got, upper_only ? "<=" : "vs", want);
    for (std::size_t i = 0; i < criterion_keys().size(); ++i) {
        if (criterion_keys()[i] == key) {
            r.id = static_cast<int>(i) + 1;
        }
    }
    return r;
}

std::string format_result(const CriterionResult& r) {
    std::ostringstream out;
    out << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << ' ' << r.key << ": " << r.detail;
    out.setf(std::ios::fixed);
    out.precision(2);
    out << " [" << r.seconds << "s]";
    return out.str();
}

}  // namespace bergekit
