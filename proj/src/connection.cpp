#include "pim/connection.hpp"

#include "pim/errors.hpp"

namespace pim {

Tensor covariant_derivative(const Tensor& t, const Connection& conn) {
    const int d = t.dim();
    if (d != conn.dim()) throw DimMismatch("connection dimension mismatch");
    const int p = t.con_rank();
    const int q = t.cov_rank();
    Tensor out(d, p, q + 1);

    // out layout: (a_1..a_p ; i, j_1..j_q), i the direction.
    std::vector<int> oidx(static_cast<std::size_t>(p + q + 1), 0);
    std::vector<int> tidx(static_cast<std::size_t>(p + q), 0);
    do {
        const int dir = oidx[static_cast<std::size_t>(p)];
        for (int s = 0; s < p; ++s) tidx[static_cast<std::size_t>(s)] = oidx[static_cast<std::size_t>(s)];
        for (int s = 0; s < q; ++s) tidx[static_cast<std::size_t>(p + s)] = oidx[static_cast<std::size_t>(p + 1 + s)];

        Rational sum = 0;
        // + Gamma[dir][m][a_s] t(..m..) over contravariant slots.
        for (int s = 0; s < p; ++s) {
            const int a = tidx[static_cast<std::size_t>(s)];
            for (int m = 0; m < d; ++m) {
                const Rational& c = conn.coef(dir, m, a);
                if (c == 0) continue;
                const int saved = tidx[static_cast<std::size_t>(s)];
                tidx[static_cast<std::size_t>(s)] = m;
                sum += c * t.at(tidx);
                tidx[static_cast<std::size_t>(s)] = saved;
            }
        }
        // - Gamma[dir][j_s][m] t(..m..) over covariant slots.
        for (int s = 0; s < q; ++s) {
            const int j = tidx[static_cast<std::size_t>(p + s)];
            for (int m = 0; m < d; ++m) {
                const Rational& c = conn.coef(dir, j, m);
                if (c == 0) continue;
                const int saved = tidx[static_cast<std::size_t>(p + s)];
                tidx[static_cast<std::size_t>(p + s)] = m;
                sum -= c * t.at(tidx);
                tidx[static_cast<std::size_t>(p + s)] = saved;
            }
        }
        out.at(oidx) = sum;
    } while (Tensor::next_index(oidx, d));
    return out;
}

}  // namespace pim
