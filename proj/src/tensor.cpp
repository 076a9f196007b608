#include "pim/tensor.hpp"

#include <algorithm>

namespace pim {

namespace {

std::size_t pow_size(int dim, int rank) {
    std::size_t n = 1;
    for (int i = 0; i < rank; ++i) n *= static_cast<std::size_t>(dim);
    return n;
}

}  // namespace

Tensor::Tensor(int dim, int contravariant_rank, int covariant_rank)
    : dim_(dim), con_(contravariant_rank), cov_(covariant_rank),
      components_(pow_size(dim, contravariant_rank + covariant_rank)) {
    if (dim <= 0) throw DimMismatch("tensor dimension must be positive");
    if (con_ < 0 || cov_ < 0) throw DimMismatch("tensor ranks must be non-negative");
}

Rational& Tensor::scalar() {
    if (rank() != 0) throw SlotMismatch("scalar() on tensor of nonzero rank");
    return components_[0];
}

const Rational& Tensor::scalar() const {
    if (rank() != 0) throw SlotMismatch("scalar() on tensor of nonzero rank");
    return components_[0];
}

std::size_t Tensor::flat(std::initializer_list<int> idx) const {
    if (static_cast<int>(idx.size()) != rank())
        throw SlotMismatch("index count does not match tensor rank");
    std::size_t f = 0;
    for (int i : idx) {
        if (i < 0 || i >= dim_) throw SlotMismatch("index out of range");
        f = f * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(i);
    }
    return f;
}

std::size_t Tensor::flat(const std::vector<int>& idx) const {
    if (static_cast<int>(idx.size()) != rank())
        throw SlotMismatch("index count does not match tensor rank");
    std::size_t f = 0;
    for (int i : idx) {
        if (i < 0 || i >= dim_) throw SlotMismatch("index out of range");
        f = f * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(i);
    }
    return f;
}

bool Tensor::is_zero() const {
    return std::all_of(components_.begin(), components_.end(),
                       [](const Rational& r) { return r == 0; });
}

void Tensor::check_same_shape(const Tensor& o) const {
    if (dim_ != o.dim_ || con_ != o.con_ || cov_ != o.cov_)
        throw DimMismatch("tensor shape mismatch");
}

bool Tensor::operator==(const Tensor& o) const {
    return dim_ == o.dim_ && con_ == o.con_ && cov_ == o.cov_ &&
           components_ == o.components_;
}

Tensor Tensor::operator+(const Tensor& o) const {
    Tensor r = *this;
    r += o;
    return r;
}

Tensor Tensor::operator-(const Tensor& o) const {
    Tensor r = *this;
    r -= o;
    return r;
}

Tensor Tensor::operator-() const {
    Tensor r = *this;
    for (auto& c : r.components_) c = -c;
    return r;
}

Tensor& Tensor::operator+=(const Tensor& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < components_.size(); ++i) components_[i] += o.components_[i];
    return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < components_.size(); ++i) components_[i] -= o.components_[i];
    return *this;
}

Tensor operator*(const Rational& c, const Tensor& t) {
    Tensor r = t;
    for (auto& x : r.components_) x *= c;
    return r;
}

std::pair<Rational, std::vector<int>> Tensor::max_abs() const {
    Rational best = 0;
    std::vector<int> witness(static_cast<std::size_t>(rank()), 0);
    std::vector<int> idx(static_cast<std::size_t>(rank()), 0);
    std::size_t f = 0;
    do {
        const Rational a = abs(components_[f]);
        if (a > best) {
            best = a;
            witness = idx;
        }
        ++f;
    } while (next_index(idx, dim_));
    return {best, witness};
}

bool Tensor::next_index(std::vector<int>& idx, int dim) {
    for (int p = static_cast<int>(idx.size()) - 1; p >= 0; --p) {
        if (++idx[static_cast<std::size_t>(p)] < dim) return true;
        idx[static_cast<std::size_t>(p)] = 0;
    }
    return false;
}

MetricPair metric_inverse(const Tensor& g) {
    if (g.con_rank() != 0 || g.cov_rank() != 2)
        throw SlotMismatch("metric_inverse expects a (0,2)-tensor");
    const int d = g.dim();
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            if (g(i, j) != g(j, i)) throw NotSymmetric("metric is not symmetric");

    // Gauss-Jordan on [g | I].
    std::vector<std::vector<Rational>> a(static_cast<std::size_t>(d),
                                         std::vector<Rational>(static_cast<std::size_t>(2 * d)));
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) a[i][j] = g(i, j);
        a[i][static_cast<std::size_t>(d + i)] = 1;
    }
    for (int col = 0; col < d; ++col) {
        int pivot = -1;
        for (int r = col; r < d; ++r)
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw SingularMetric("metric has zero determinant");
        std::swap(a[static_cast<std::size_t>(col)], a[static_cast<std::size_t>(pivot)]);
        const Rational p = a[col][col];
        for (int j = 0; j < 2 * d; ++j) a[col][j] /= p;
        for (int r = 0; r < d; ++r) {
            if (r == col || a[r][col] == 0) continue;
            const Rational f = a[r][col];
            for (int j = 0; j < 2 * d; ++j) a[r][j] -= f * a[col][j];
        }
    }
    MetricPair mp{g, Tensor(d, 2, 0)};
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) mp.g_inv(i, j) = a[i][static_cast<std::size_t>(d + j)];
    return mp;
}

Tensor contract(const Tensor& t, int slot_a, int slot_b,
                const std::optional<MetricPair>& metric) {
    const int r = t.rank();
    if (slot_a == slot_b || slot_a < 0 || slot_b < 0 || slot_a >= r || slot_b >= r)
        throw SlotMismatch("invalid contraction slots");
    if (slot_a > slot_b) std::swap(slot_a, slot_b);
    const int con = t.con_rank();
    const bool a_con = slot_a < con;
    const bool b_con = slot_b < con;
    const Tensor* weight = nullptr;  // nullptr: plain trace
    int out_con = con;
    if (a_con != b_con) {
        out_con = con - 1;
    } else {
        if (!metric) throw MissingMetric("contraction of like slots needs a metric");
        weight = a_con ? &metric->g : &metric->g_inv;
        out_con = a_con ? con - 2 : con;
    }
    const int d = t.dim();
    int out_cov = t.cov_rank();
    if (!a_con && !b_con)
        out_cov -= 2;
    else if (a_con != b_con)
        out_cov -= 1;
    Tensor out(d, out_con, out_cov);

    std::vector<int> oidx(static_cast<std::size_t>(out.rank()), 0);
    std::vector<int> tidx(static_cast<std::size_t>(r), 0);
    do {
        Rational sum = 0;
        for (int p = 0, q = 0; p < r; ++p)
            if (p != slot_a && p != slot_b) tidx[static_cast<std::size_t>(p)] = oidx[static_cast<std::size_t>(q++)];
        for (int ia = 0; ia < d; ++ia) {
            for (int ib = 0; ib < d; ++ib) {
                if (!weight && ia != ib) continue;
                tidx[static_cast<std::size_t>(slot_a)] = ia;
                tidx[static_cast<std::size_t>(slot_b)] = ib;
                const Rational& v = t.at(tidx);
                if (v == 0) continue;
                if (weight)
                    sum += (*weight)(ia, ib) * v;
                else
                    sum += v;
            }
        }
        out.at(oidx) = sum;
    } while (Tensor::next_index(oidx, d));
    return out;
}

Tensor sharp(const Tensor& form, const MetricPair& metric) {
    if (form.con_rank() != 0 || form.cov_rank() != 1)
        throw SlotMismatch("sharp expects a (0,1)-tensor");
    const int d = form.dim();
    Tensor v(d, 1, 0);
    for (int l = 0; l < d; ++l) {
        Rational s = 0;
        for (int m = 0; m < d; ++m) s += metric.g_inv(l, m) * form(m);
        v(l) = s;
    }
    return v;
}

Tensor lower_upper(const Tensor& t, const MetricPair& metric) {
    if (t.con_rank() != 1) throw SlotMismatch("lower_upper expects exactly one contravariant slot");
    const int d = t.dim();
    const int k = t.cov_rank();
    Tensor out(d, 0, k + 1);
    std::vector<int> oidx(static_cast<std::size_t>(k + 1), 0);
    std::vector<int> tidx(static_cast<std::size_t>(k + 1), 0);
    do {
        // out(j1..jk, w) = sum_l t(l, j1..jk) g(l, w)
        Rational s = 0;
        const int w = oidx[static_cast<std::size_t>(k)];
        for (int l = 0; l < d; ++l) {
            tidx[0] = l;
            for (int p = 0; p < k; ++p) tidx[static_cast<std::size_t>(p + 1)] = oidx[static_cast<std::size_t>(p)];
            const Rational& v = t.at(tidx);
            if (v != 0) s += v * metric.g(l, w);
        }
        out.at(oidx) = s;
    } while (Tensor::next_index(oidx, d));
    return out;
}

Tensor kulkarni_nomizu(const Tensor& S, const Tensor& P) {
    if (S.con_rank() != 0 || S.cov_rank() != 2 || P.con_rank() != 0 || P.cov_rank() != 2)
        throw SlotMismatch("kulkarni_nomizu expects (0,2)-tensors");
    if (S.dim() != P.dim()) throw DimMismatch("kulkarni_nomizu dimension mismatch");
    const int d = S.dim();
    Tensor out(d, 0, 4);
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y)
            for (int z = 0; z < d; ++z)
                for (int w = 0; w < d; ++w)
                    out(x, y, z, w) = S(x, z) * P(y, w) - S(y, z) * P(x, w) +
                                      S(y, w) * P(x, z) - S(x, w) * P(y, z);
    return out;
}

Inertia congruence_inertia(const Tensor& g) {
    if (g.con_rank() != 0 || g.cov_rank() != 2)
        throw SlotMismatch("congruence_inertia expects a (0,2)-tensor");
    const int d = g.dim();
    std::vector<std::vector<Rational>> a(static_cast<std::size_t>(d),
                                         std::vector<Rational>(static_cast<std::size_t>(d)));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) a[i][j] = g(i, j);

    Inertia res;
    for (int k = 0; k < d; ++k) {
        // Find a nonzero diagonal pivot at or after k.
        int pivot = -1;
        for (int i = k; i < d; ++i)
            if (a[i][i] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) {
            // Look for an off-diagonal entry; congruence e_i <- e_i + e_j
            // makes the diagonal nonzero.
            int pi = -1, pj = -1;
            for (int i = k; i < d && pi < 0; ++i)
                for (int j = i + 1; j < d; ++j)
                    if (a[i][j] != 0) {
                        pi = i;
                        pj = j;
                        break;
                    }
            if (pi < 0) {
                res.zero += d - k;
                return res;
            }
            for (int c = 0; c < d; ++c) a[pi][c] += a[pj][c];
            for (int r = 0; r < d; ++r) a[r][pi] += a[r][pj];
            pivot = pi;
        }
        if (pivot != k) {
            std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(k)]);
            for (int r = 0; r < d; ++r) std::swap(a[r][pivot], a[r][k]);
        }
        const Rational p = a[k][k];
        if (p > 0)
            ++res.positive;
        else
            ++res.negative;
        for (int r = k + 1; r < d; ++r) {
            if (a[r][k] == 0) continue;
            const Rational f = a[r][k] / p;
            for (int c = 0; c < d; ++c) a[r][c] -= f * a[k][c];
        }
        for (int c = k + 1; c < d; ++c) {
            if (a[k][c] == 0) continue;
            const Rational f = a[k][c] / p;
            for (int r = 0; r < d; ++r) a[r][c] -= f * a[r][k];
        }
    }
    return res;
}

}  // namespace pim
