#include "montel/sample_table.hpp"

namespace montel {

long long Box::point_count() const {
    if (empty()) return 0;
    long long n = 1;
    for (int k = 0; k < dim(); ++k) n *= upper.entries[k] - lower.entries[k] + 1;
    return n;
}

bool Box::contains(const LatticeVector& n) const {
    if (n.dim() != dim()) return false;
    for (int k = 0; k < dim(); ++k) {
        if (n.entries[k] < lower.entries[k] || n.entries[k] > upper.entries[k]) return false;
    }
    return true;
}

void for_each_lattice_point(const Box& box, const std::function<void(const LatticeVector&)>& visit) {
    if (box.empty()) return;
    LatticeVector n = box.lower;
    const int d = box.dim();
    while (true) {
        visit(n);
        int k = d - 1;
        while (k >= 0 && n.entries[k] == box.upper.entries[k]) {
            n.entries[k] = box.lower.entries[k];
            --k;
        }
        if (k < 0) break;
        ++n.entries[k];
    }
}

SampleTable::SampleTable(LatticeVector lower, LatticeVector upper,
                         std::vector<GaussianRational> values)
    : box_{std::move(lower), std::move(upper)}, values_(std::move(values)) {
    if (box_.lower.dim() != box_.upper.dim() || box_.dim() < 1) {
        throw input_error("sample table: corner dimension mismatch");
    }
    if (box_.empty()) throw input_error("sample table: empty box");
    if (static_cast<long long>(values_.size()) != box_.point_count()) {
        throw input_error("sample table: value count does not match box size");
    }
}

SampleTable SampleTable::tabulate(const Box& box,
                                  const std::function<GaussianRational(const LatticeVector&)>& f) {
    if (box.empty()) throw input_error("sample table: empty box");
    std::vector<GaussianRational> vals;
    vals.reserve(static_cast<std::size_t>(box.point_count()));
    for_each_lattice_point(box, [&](const LatticeVector& n) { vals.push_back(f(n)); });
    return {box.lower, box.upper, std::move(vals)};
}

SampleTable SampleTable::sample(const ExpPolynomial& f, const LatticeVector& lower,
                                const LatticeVector& upper) {
    return tabulate({lower, upper}, [&](const LatticeVector& n) { return f.evaluate(n); });
}

SampleTable SampleTable::sample(const Polynomial& f, const LatticeVector& lower,
                                const LatticeVector& upper) {
    return tabulate({lower, upper}, [&](const LatticeVector& n) { return f.evaluate(n); });
}

const GaussianRational& SampleTable::at(const LatticeVector& n) const {
    if (!box_.contains(n)) throw input_error("sample table: point outside box");
    long long idx = 0;
    for (int k = 0; k < dim(); ++k) {
        idx = idx * (box_.upper.entries[k] - box_.lower.entries[k] + 1) +
              (n.entries[k] - box_.lower.entries[k]);
    }
    return values_[static_cast<std::size_t>(idx)];
}

bool SampleTable::all_zero() const {
    for (const auto& v : values_) {
        if (!v.is_zero()) return false;
    }
    return true;
}

void SampleTable::for_each_point(
    const std::function<void(const LatticeVector&, const GaussianRational&)>& visit) const {
    std::size_t idx = 0;
    for_each_lattice_point(box_, [&](const LatticeVector& n) { visit(n, values_[idx++]); });
}

} // namespace montel
