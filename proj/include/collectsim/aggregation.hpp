#pragma once

#include <cstdint>
#include <string>

namespace collectsim {

// A value carried by a collection algorithm: a count/sum or a candidate
// extremum, depending on the aggregation kind in use.
using agg_value = double;

enum class agg_tag { sum, min, max, custom };

/// A divisible aggregation structure: an associative, commutative combine
/// with an identity element, plus the two division operators the collection
/// algorithms rely on -- an even split into n parts and a fractional
/// extraction by a factor in [0, 1].
///
/// Three kinds ship (sum, min, max). New kinds can be registered by
/// constructing an instance with custom operator functions.
class aggregation_kind {
public:
    using combine_fn = agg_value (*)(agg_value, agg_value);
    using split_fn = agg_value (*)(agg_value, std::uint64_t);
    using scale_fn = agg_value (*)(agg_value, double);

    aggregation_kind(agg_tag tag, std::string name, agg_value identity,
                     combine_fn combine, split_fn split, scale_fn scale);

    static const aggregation_kind& sum();
    static const aggregation_kind& min();
    static const aggregation_kind& max();

    agg_tag tag() const { return tag_; }
    const std::string& name() const { return name_; }
    agg_value identity() const { return identity_; }

    // a (+) b. Throws std::domain_error on operands invalid for the kind
    // (non-finite for sum, NaN for min/max).
    agg_value combine(agg_value a, agg_value b) const;

    // v (/) n: an element that combined with itself n times gives back v.
    // Division for sum, identity for min/max. Throws std::invalid_argument
    // when n is zero.
    agg_value split_even(agg_value v, std::uint64_t n) const;

    // v (x) k: extracts the fraction k of v. Multiplication for sum,
    // identity for min/max. Throws std::invalid_argument unless 0 <= k <= 1.
    agg_value scale(agg_value v, double k) const;

private:
    agg_tag tag_;
    std::string name_;
    agg_value identity_;
    combine_fn combine_;
    split_fn split_;
    scale_fn scale_;
};

} // namespace collectsim
