#pragma once

#include <functional>
#include <vector>

#include "montel/exp_polynomial.hpp"

namespace montel {

/// Rectangular window [lower, upper] in Z^d (both corners inclusive).
struct Box {
    LatticeVector lower, upper;

    int dim() const { return lower.dim(); }
    bool empty() const {
        for (int k = 0; k < dim(); ++k) {
            if (lower.entries[k] > upper.entries[k]) return true;
        }
        return false;
    }
    long long point_count() const;
    bool contains(const LatticeVector& n) const;

    bool operator==(const Box&) const = default;
};

/// Exact values of a function on every point of a box, stored row-major with
/// the last coordinate varying fastest.
class SampleTable {
public:
    SampleTable(LatticeVector lower, LatticeVector upper, std::vector<GaussianRational> values);

    static SampleTable sample(const ExpPolynomial& f, const LatticeVector& lower,
                              const LatticeVector& upper);
    static SampleTable sample(const Polynomial& f, const LatticeVector& lower,
                              const LatticeVector& upper);
    /// Tabulates an arbitrary exact function of the lattice point.
    static SampleTable tabulate(const Box& box,
                                const std::function<GaussianRational(const LatticeVector&)>& f);

    int dim() const { return box_.dim(); }
    const Box& box() const { return box_; }
    const LatticeVector& lower() const { return box_.lower; }
    const LatticeVector& upper() const { return box_.upper; }
    long long point_count() const { return box_.point_count(); }
    const std::vector<GaussianRational>& values() const { return values_; }

    const GaussianRational& at(const LatticeVector& n) const;

    bool all_zero() const;

    /// Visits every point in storage order (last coordinate fastest).
    void for_each_point(const std::function<void(const LatticeVector&, const GaussianRational&)>&
                            visit) const;

    bool operator==(const SampleTable&) const = default;

private:
    Box box_;
    std::vector<GaussianRational> values_;
};

/// Visits every lattice point of a box in table storage order.
void for_each_lattice_point(const Box& box, const std::function<void(const LatticeVector&)>& visit);

} // namespace montel
