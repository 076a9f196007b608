#pragma once

#include "pim/errors.hpp"
#include "pim/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

namespace pim {

// Dense frame-indexed tensor over exact rationals. Component layout is
// row-major with all contravariant indices before the covariant ones.
class Tensor {
public:
    Tensor() = default;
    Tensor(int dim, int contravariant_rank, int covariant_rank);

    int dim() const { return dim_; }
    int con_rank() const { return con_; }
    int cov_rank() const { return cov_; }
    int rank() const { return con_ + cov_; }
    std::size_t size() const { return components_.size(); }

    template <typename... I>
    Rational& operator()(I... idx) {
        return components_[flat({static_cast<int>(idx)...})];
    }
    template <typename... I>
    const Rational& operator()(I... idx) const {
        return components_[flat({static_cast<int>(idx)...})];
    }

    Rational& at(const std::vector<int>& idx) { return components_[flat(idx)]; }
    const Rational& at(const std::vector<int>& idx) const { return components_[flat(idx)]; }

    // Rank-0 access.
    Rational& scalar();
    const Rational& scalar() const;

    bool is_zero() const;
    bool operator==(const Tensor& o) const;
    bool operator!=(const Tensor& o) const { return !(*this == o); }

    Tensor operator+(const Tensor& o) const;
    Tensor operator-(const Tensor& o) const;
    Tensor operator-() const;
    Tensor& operator+=(const Tensor& o);
    Tensor& operator-=(const Tensor& o);
    friend Tensor operator*(const Rational& c, const Tensor& t);

    // Largest |component| together with the index tuple attaining it.
    std::pair<Rational, std::vector<int>> max_abs() const;

    const std::vector<Rational>& components() const { return components_; }

    // Iterates all index tuples (odometer order).
    static bool next_index(std::vector<int>& idx, int dim);

private:
    std::size_t flat(std::initializer_list<int> idx) const;
    std::size_t flat(const std::vector<int>& idx) const;
    void check_same_shape(const Tensor& o) const;

    int dim_ = 0;
    int con_ = 0;
    int cov_ = 0;
    std::vector<Rational> components_;
};

struct MetricPair {
    Tensor g;      // (0,2), symmetric
    Tensor g_inv;  // (2,0), symmetric
};

// Exact inverse via Gaussian elimination. Throws NotSymmetric / SingularMetric.
MetricPair metric_inverse(const Tensor& g);

// Contracts slot_a with slot_b (positions in combined order, contravariant
// first). Mixed slots trace directly; two covariant slots need g_inv, two
// contravariant slots need g.
Tensor contract(const Tensor& t, int slot_a, int slot_b,
                const std::optional<MetricPair>& metric = std::nullopt);

// Metric dual of a 1-form.
Tensor sharp(const Tensor& form, const MetricPair& metric);

// Contracts the single contravariant slot with g, appending a covariant slot
// at the end; (1,k) -> (0,k+1).
Tensor lower_upper(const Tensor& t, const MetricPair& metric);

// (S KN P)(x,y,z,w) = S(x,z)P(y,w) - S(y,z)P(x,w) + S(y,w)P(x,z) - S(x,w)P(y,z).
Tensor kulkarni_nomizu(const Tensor& S, const Tensor& P);

// Signature of a symmetric matrix by exact congruence: (positive, negative, zero).
struct Inertia {
    int positive = 0;
    int negative = 0;
    int zero = 0;
};
Inertia congruence_inertia(const Tensor& g);

}  // namespace pim
