#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace simplicial {

/// Exact small rational, normalized with positive denominator.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    friend Rational operator+(Rational a, Rational b) {
        return {a.num * b.den + b.num * a.den, a.den * b.den};
    }
    friend Rational operator-(Rational a, Rational b) {
        return {a.num * b.den - b.num * a.den, a.den * b.den};
    }
    friend Rational operator*(Rational a, Rational b) { return {a.num * b.num, a.den * b.den}; }
    friend bool operator==(const Rational& a, const Rational& b) = default;

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string to_string() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }
};

// ---------------------------------------------------------------------------
// Tables, targets, patterns
// ---------------------------------------------------------------------------

/// Individuals x numeric features; every feature is defined for every individual.
class FeatureTable {
public:
    void add_individual(const std::string& id) {
        if (index_.contains(id)) throw std::invalid_argument("duplicate individual " + id);
        index_[id] = individuals_.size();
        individuals_.push_back(id);
        for (auto& [_, col] : columns_) col.push_back(0.0);
    }

    void add_feature(const std::string& name, std::vector<double> values) {
        if (columns_.contains(name)) throw std::invalid_argument("duplicate feature " + name);
        if (values.size() != individuals_.size()) {
            throw std::invalid_argument("feature " + name + " has " +
                                        std::to_string(values.size()) + " values for " +
                                        std::to_string(individuals_.size()) + " individuals");
        }
        feature_names_.push_back(name);
        columns_.emplace(name, std::move(values));
    }

    void set_value(const std::string& id, const std::string& feature, double value) {
        columns_.at(feature).at(row(id)) = value;
    }

    const std::vector<std::string>& individuals() const noexcept { return individuals_; }
    const std::vector<std::string>& feature_names() const noexcept { return feature_names_; }
    bool has_feature(const std::string& name) const { return columns_.contains(name); }

    const std::vector<double>& column(const std::string& feature) const {
        auto it = columns_.find(feature);
        if (it == columns_.end()) throw std::invalid_argument("unknown feature " + feature);
        return it->second;
    }

    std::size_t row(const std::string& id) const {
        auto it = index_.find(id);
        if (it == index_.end()) throw std::invalid_argument("unknown individual " + id);
        return it->second;
    }

    std::size_t size() const noexcept { return individuals_.size(); }

private:
    std::vector<std::string> individuals_;
    std::vector<std::string> feature_names_;
    std::map<std::string, std::vector<double>> columns_;
    std::map<std::string, std::size_t> index_;
};

/// Total binary labeling of the individuals.
struct Target {
    std::string name;
    std::map<std::string, bool> labels;

    bool operator()(const std::string& id) const {
        auto it = labels.find(id);
        if (it == labels.end()) throw std::invalid_argument("no label for individual " + id);
        return it->second;
    }
};

enum class CmpOp { lt, le, gt, ge };

inline std::optional<CmpOp> parse_op(const std::string& s) {
    if (s == "<") return CmpOp::lt;
    if (s == "<=") return CmpOp::le;
    if (s == ">") return CmpOp::gt;
    if (s == ">=") return CmpOp::ge;
    return std::nullopt;
}

inline std::string op_name(CmpOp op) {
    switch (op) {
        case CmpOp::lt: return "<";
        case CmpOp::le: return "<=";
        case CmpOp::gt: return ">";
        case CmpOp::ge: return ">=";
    }
    return "?";
}

inline bool cmp_apply(double value, CmpOp op, double threshold) {
    switch (op) {
        case CmpOp::lt: return value < threshold;
        case CmpOp::le: return value <= threshold;
        case CmpOp::gt: return value > threshold;
        case CmpOp::ge: return value >= threshold;
    }
    return false;
}

struct AtomicCondition {
    std::string feature;
    CmpOp op = CmpOp::lt;
    double threshold = 0.0;

    friend bool operator==(const AtomicCondition&, const AtomicCondition&) = default;
    friend auto operator<=>(const AtomicCondition&, const AtomicCondition&) = default;

    std::string to_string() const {
        std::ostringstream out;
        out << "(" << feature << " " << op_name(op) << " " << threshold << ")";
        return out.str();
    }
};

/// A conjunction of atomic threshold conditions; duplicates collapse
/// (patterns are sets).
struct Pattern {
    std::vector<AtomicCondition> conditions;

    explicit Pattern(std::vector<AtomicCondition> conds) : conditions(std::move(conds)) {
        if (conditions.empty()) throw std::invalid_argument("pattern must be nonempty");
        std::sort(conditions.begin(), conditions.end());
        conditions.erase(std::unique(conditions.begin(), conditions.end()), conditions.end());
    }
    Pattern(std::initializer_list<AtomicCondition> conds)
        : Pattern(std::vector<AtomicCondition>(conds)) {}

    std::size_t length() const noexcept { return conditions.size(); }

    bool matches(const FeatureTable& tbl, std::size_t row) const {
        for (const auto& cond : conditions) {
            if (!cmp_apply(tbl.column(cond.feature)[row], cond.op, cond.threshold)) return false;
        }
        return true;
    }

    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < conditions.size(); ++i) {
            if (i > 0) out += " AND ";
            out += conditions[i].to_string();
        }
        return out;
    }
};

// ---------------------------------------------------------------------------
// Support, shares, quality
// ---------------------------------------------------------------------------

/// Row indices of the individuals fulfilling the pattern.
inline std::vector<std::size_t> support_rows(const FeatureTable& tbl, const Pattern& p) {
    for (const auto& cond : p.conditions) {
        if (!tbl.has_feature(cond.feature)) {
            throw std::invalid_argument("unknown feature " + cond.feature);
        }
    }
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < tbl.size(); ++i) {
        if (p.matches(tbl, i)) rows.push_back(i);
    }
    return rows;
}

/// The pattern-fulfilling individuals, in table order.
inline std::vector<std::string> support(const FeatureTable& tbl, const Pattern& p) {
    std::vector<std::string> out;
    for (std::size_t row : support_rows(tbl, p)) out.push_back(tbl.individuals()[row]);
    return out;
}

/// Global share of label 1.
inline Rational base_rate_fraction(const FeatureTable& tbl, const Target& t) {
    if (tbl.size() == 0) throw std::invalid_argument("empty table has no base rate");
    long long ones = 0;
    for (const auto& id : tbl.individuals()) {
        if (t(id)) ++ones;
    }
    return {ones, static_cast<long long>(tbl.size())};
}

inline double base_rate(const FeatureTable& tbl, const Target& t) {
    return base_rate_fraction(tbl, t).to_double();
}

/// Fraction of the pattern's support carrying label 1; requires nonempty support.
inline double target_share(const FeatureTable& tbl, const Pattern& p, const Target& t) {
    const auto rows = support_rows(tbl, p);
    if (rows.empty()) throw std::invalid_argument("target share undefined on empty support");
    long long ones = 0;
    for (std::size_t row : rows) {
        if (t(tbl.individuals()[row])) ++ones;
    }
    return static_cast<double>(ones) / static_cast<double>(rows.size());
}

/// Quality-function family q_t^a(p) = (support size)^a * (share - base rate).
/// a = 0 gain, a = 0.5 binomial test, a = 1 Piatetsky-Shapiro.
struct QualitySpec {
    double a = 0.0;
};

struct QualityValue {
    double value = 0.0;
    std::size_t support = 0;
    double share = 0.0;
    bool empty_support = false;
    std::optional<Rational> exact;  // populated for integer exponents
};

inline QualityValue quality_detail(const FeatureTable& tbl, const Pattern& p, const Target& t,
                                   const QualitySpec& spec) {
    QualityValue out;
    const auto rows = support_rows(tbl, p);
    out.support = rows.size();
    if (rows.empty()) {
        // (i_p)^a is 0 for a > 0 and ambiguous for a = 0; both report 0, flagged.
        out.empty_support = true;
        return out;
    }
    long long ones = 0;
    for (std::size_t row : rows) {
        if (t(tbl.individuals()[row])) ++ones;
    }
    const Rational share{ones, static_cast<long long>(rows.size())};
    const Rational lift = share - base_rate_fraction(tbl, t);
    out.share = share.to_double();
    out.value = std::pow(static_cast<double>(rows.size()), spec.a) * lift.to_double();
    if (spec.a == 0.0) {
        out.exact = lift;
    } else if (spec.a == 1.0) {
        out.exact = Rational{static_cast<long long>(rows.size()), 1} * lift;
    }
    return out;
}

inline double quality(const FeatureTable& tbl, const Pattern& p, const Target& t,
                      const QualitySpec& spec) {
    return quality_detail(tbl, p, t, spec).value;
}

// ---------------------------------------------------------------------------
// Threshold scanning and batch evaluation
// ---------------------------------------------------------------------------

struct ScanResult {
    double threshold = 0.0;
    double quality = 0.0;
    std::size_t support = 0;
    bool degenerate = false;  // constant feature, no informative split
};

/// Scans candidate thresholds at midpoints between consecutive distinct
/// feature values (plus sentinels below and above the range) and returns an
/// argmax of the quality. Ties break toward larger support, then smaller
/// threshold.
inline ScanResult scan_thresholds(const FeatureTable& tbl, const std::string& feature, CmpOp op,
                                  const Target& t, const QualitySpec& spec) {
    std::vector<double> values = tbl.column(feature);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());

    std::vector<double> candidates;
    if (!values.empty()) {
        candidates.push_back(values.front() - 1.0);
        for (std::size_t i = 0; i + 1 < values.size(); ++i) {
            candidates.push_back((values[i] + values[i + 1]) / 2.0);
        }
        candidates.push_back(values.back() + 1.0);
    }

    ScanResult best;
    bool have_best = false;
    for (double threshold : candidates) {
        const Pattern p{{feature, op, threshold}};
        const auto q = quality_detail(tbl, p, t, spec);
        const bool better =
            !have_best || q.value > best.quality + 1e-12 ||
            (std::abs(q.value - best.quality) <= 1e-12 &&
             (q.support > best.support ||
              (q.support == best.support && threshold < best.threshold)));
        if (better) {
            best = {threshold, q.value, q.support, false};
            have_best = true;
        }
    }
    best.degenerate = values.size() < 2;
    return best;
}

struct PatternEvaluation {
    Pattern pattern;
    std::string target;
    std::size_t support = 0;
    double share = 0.0;
    double quality = 0.0;
    std::optional<Rational> exact;
    bool empty_support = false;
};

/// Batch evaluation of patterns against targets, sorted by quality descending
/// (ties: larger support first, then input order).
inline std::vector<PatternEvaluation> evaluate_pattern_set(const FeatureTable& tbl,
                                                           const std::vector<Pattern>& patterns,
                                                           const std::vector<Target>& targets,
                                                           const QualitySpec& spec) {
    std::vector<PatternEvaluation> rows;
    for (const auto& target : targets) {
        for (const auto& pattern : patterns) {
            const auto q = quality_detail(tbl, pattern, target, spec);
            rows.push_back({pattern, target.name, q.support, q.share, q.value, q.exact,
                            q.empty_support});
        }
    }
    std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        if (a.quality != b.quality) return a.quality > b.quality;
        return a.support > b.support;
    });
    return rows;
}

}  // namespace simplicial
