#pragma once

#include "pim/rational.hpp"
#include "pim/tensor.hpp"

#include <string>

namespace pim {

// Frame coefficients of an affine connection: D_{b_i} b_j = Gamma[i][j][k] b_k.
class Connection {
public:
    Connection() = default;
    Connection(int dim, std::string label)
        : dim_(dim), label_(std::move(label)),
          gamma_(static_cast<std::size_t>(dim) * dim * dim) {}

    int dim() const { return dim_; }
    const std::string& label() const { return label_; }

    Rational& coef(int i, int j, int k) { return gamma_[flat(i, j, k)]; }
    const Rational& coef(int i, int j, int k) const { return gamma_[flat(i, j, k)]; }

    bool operator==(const Connection& o) const {
        return dim_ == o.dim_ && gamma_ == o.gamma_;
    }

private:
    std::size_t flat(int i, int j, int k) const {
        return (static_cast<std::size_t>(i) * dim_ + j) * dim_ + k;
    }

    int dim_ = 0;
    std::string label_;
    std::vector<Rational> gamma_;
};

// Covariant derivative of a constant-component (p,q)-tensor in a
// left-invariant frame; the direction becomes the first covariant slot of
// the (p,q+1) result.
Tensor covariant_derivative(const Tensor& t, const Connection& conn);

}  // namespace pim
