#include "graphkrylov/dense_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "graphkrylov/errors.hpp"
#include "graphkrylov/kernel_function.hpp"

namespace graphkrylov {

namespace {

double pythag(double a, double b) {
    const double absa = std::abs(a);
    const double absb = std::abs(b);
    if (absa > absb) {
        const double r = absb / absa;
        return absa * std::sqrt(1.0 + r * r);
    }
    if (absb == 0.0) return 0.0;
    const double r = absa / absb;
    return absb * std::sqrt(1.0 + r * r);
}

double sign_of(double a, double b) { return b >= 0.0 ? std::abs(a) : -std::abs(a); }

} // namespace

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

double DenseMatrix::frobenius_norm() const {
    double s = 0.0;
    for (double v : a_) s += v * v;
    return std::sqrt(s);
}

DenseMatrix DenseMatrix::transposed() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t j = 0; j < cols_; ++j)
        for (std::size_t i = 0; i < rows_; ++i) t(j, i) = (*this)(i, j);
    return t;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("matmul: inner dimensions differ");
    DenseMatrix c(a.rows(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        double* cj = c.col(j);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double bkj = b(k, j);
            if (bkj == 0.0) continue;
            const double* ak = a.col(k);
            for (std::size_t i = 0; i < a.rows(); ++i) cj[i] += ak[i] * bkj;
        }
    }
    return c;
}

DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("operator-: shapes differ");
    DenseMatrix c(a.rows(), a.cols());
    for (std::size_t k = 0; k < a.rows() * a.cols(); ++k) c.data()[k] = a.data()[k] - b.data()[k];
    return c;
}

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("operator+: shapes differ");
    DenseMatrix c(a.rows(), a.cols());
    for (std::size_t k = 0; k < a.rows() * a.cols(); ++k) c.data()[k] = a.data()[k] + b.data()[k];
    return c;
}

DenseMatrix matmul_tn(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows() != b.rows()) throw DimensionMismatch("matmul_tn: row counts differ");
    DenseMatrix c(a.cols(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        const double* bj = b.col(j);
        for (std::size_t i = 0; i < a.cols(); ++i) {
            const double* ai = a.col(i);
            double s = 0.0;
            for (std::size_t k = 0; k < a.rows(); ++k) s += ai[k] * bj[k];
            c(i, j) = s;
        }
    }
    return c;
}

QrResult reduced_qr(const DenseMatrix& x) {
    const std::size_t n = x.rows();
    const std::size_t N = x.cols();
    if (n < N || N == 0) throw DimensionMismatch("reduced_qr: need n >= N >= 1");

    const double scale = x.frobenius_norm();
    DenseMatrix a = x;              // Householder vectors accumulate below the diagonal
    std::vector<double> beta(N, 0.0);

    for (std::size_t j = 0; j < N; ++j) {
        double norm = 0.0;
        for (std::size_t i = j; i < n; ++i) norm += a(i, j) * a(i, j);
        norm = std::sqrt(norm);
        if (norm == 0.0) { beta[j] = 0.0; continue; }
        const double alpha = a(j, j) >= 0.0 ? -norm : norm;
        // v = x_j - alpha e_j, normalized so v_j = 1
        const double vjj = a(j, j) - alpha;
        for (std::size_t i = j + 1; i < n; ++i) a(i, j) /= vjj;
        beta[j] = -vjj / alpha;     // 2 / (v^T v) for this scaling
        a(j, j) = alpha;
        // apply the reflector to the remaining columns
        for (std::size_t k = j + 1; k < N; ++k) {
            double s = a(j, k);
            for (std::size_t i = j + 1; i < n; ++i) s += a(i, j) * a(i, k);
            s *= beta[j];
            a(j, k) -= s;
            for (std::size_t i = j + 1; i < n; ++i) a(i, k) -= s * a(i, j);
        }
    }

    DenseMatrix r(N, N);
    for (std::size_t j = 0; j < N; ++j)
        for (std::size_t i = 0; i <= j; ++i) r(i, j) = a(i, j);

    // form Q by applying the reflectors in reverse to the leading identity
    DenseMatrix q(n, N);
    for (std::size_t j = 0; j < N; ++j) q(j, j) = 1.0;
    for (std::size_t j = N; j-- > 0;) {
        if (beta[j] == 0.0) continue;
        for (std::size_t k = j; k < N; ++k) {
            double s = q(j, k);
            for (std::size_t i = j + 1; i < n; ++i) s += a(i, j) * q(i, k);
            s *= beta[j];
            q(j, k) -= s;
            for (std::size_t i = j + 1; i < n; ++i) q(i, k) -= s * a(i, j);
        }
    }

    // sign convention: diag(R) >= 0
    for (std::size_t j = 0; j < N; ++j) {
        if (r(j, j) < 0.0) {
            for (std::size_t k = j; k < N; ++k) r(j, k) = -r(j, k);
            for (std::size_t i = 0; i < n; ++i) q(i, j) = -q(i, j);
        }
    }

    bool deficient = false;
    for (std::size_t j = 0; j < N; ++j)
        if (std::abs(r(j, j)) <= kTolRank * scale) deficient = true;

    return {std::move(q), std::move(r), deficient};
}

namespace {

// Householder reduction of a symmetric matrix to tridiagonal form, with the
// orthogonal transformation accumulated in z. On return d holds the diagonal
// and e[1..n-1] the subdiagonal.
void tred2(DenseMatrix& z, std::vector<double>& d, std::vector<double>& e) {
    const std::size_t n = z.rows();
    d.assign(n, 0.0);
    e.assign(n, 0.0);

    for (std::size_t i = n - 1; i >= 1; --i) {
        const std::size_t l = i - 1;
        double h = 0.0;
        if (l > 0) {
            double scale = 0.0;
            for (std::size_t k = 0; k <= l; ++k) scale += std::abs(z(i, k));
            if (scale == 0.0) {
                e[i] = z(i, l);
            } else {
                for (std::size_t k = 0; k <= l; ++k) {
                    z(i, k) /= scale;
                    h += z(i, k) * z(i, k);
                }
                double f = z(i, l);
                double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
                e[i] = scale * g;
                h -= f * g;
                z(i, l) = f - g;
                f = 0.0;
                for (std::size_t j = 0; j <= l; ++j) {
                    z(j, i) = z(i, j) / h;
                    g = 0.0;
                    for (std::size_t k = 0; k <= j; ++k) g += z(j, k) * z(i, k);
                    for (std::size_t k = j + 1; k <= l; ++k) g += z(k, j) * z(i, k);
                    e[j] = g / h;
                    f += e[j] * z(i, j);
                }
                const double hh = f / (h + h);
                for (std::size_t j = 0; j <= l; ++j) {
                    f = z(i, j);
                    e[j] = g = e[j] - hh * f;
                    for (std::size_t k = 0; k <= j; ++k)
                        z(j, k) -= f * e[k] + g * z(i, k);
                }
            }
        } else {
            e[i] = z(i, l);
        }
        d[i] = h;
    }
    d[0] = 0.0;
    e[0] = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (d[i] != 0.0) {
            for (std::size_t j = 0; j < i; ++j) {
                double g = 0.0;
                for (std::size_t k = 0; k < i; ++k) g += z(i, k) * z(k, j);
                for (std::size_t k = 0; k < i; ++k) z(k, j) -= g * z(k, i);
            }
        }
        d[i] = z(i, i);
        z(i, i) = 1.0;
        for (std::size_t j = 0; j < i; ++j) z(j, i) = z(i, j) = 0.0;
    }
}

// Implicit-shift QL iteration on the tridiagonal (d, e); eigenvectors
// accumulated into the columns of z. Off-diagonal entries are negligible
// relative to their neighbors or to the matrix scale (dropping an entry of
// size eps*|T| is a backward-stable perturbation; the neighbor test alone
// stalls on large exact null spaces, e.g. Laplacians of disconnected graphs).
void tqli(std::vector<double>& d, std::vector<double>& e, DenseMatrix& z) {
    const std::size_t n = d.size();
    if (n == 0) return;
    for (std::size_t i = 1; i < n; ++i) e[i - 1] = e[i];
    e[n - 1] = 0.0;

    const double eps = std::numeric_limits<double>::epsilon();
    double anorm = 0.0;
    for (std::size_t i = 0; i < n; ++i) anorm = std::max(anorm, std::abs(d[i]) + std::abs(e[i]));
    const double floor_tol = eps * anorm;

    for (std::size_t l = 0; l < n; ++l) {
        int iter = 0;
        std::size_t m;
        do {
            for (m = l; m + 1 < n; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= eps * dd || std::abs(e[m]) <= floor_tol) break;
            }
            if (m != l) {
                if (iter++ == 50) throw Error("sym_eig: QL iteration failed to converge");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = pythag(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + sign_of(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                bool underflow = false;
                for (std::size_t i = m; i-- > l;) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    e[i + 1] = r = pythag(f, g);
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        underflow = true;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    d[i + 1] = g + (p = s * r);
                    g = c * r - b;
                    double* zi = z.col(i);
                    double* zi1 = z.col(i + 1);
                    for (std::size_t k = 0; k < n; ++k) {
                        f = zi1[k];
                        zi1[k] = s * zi[k] + c * f;
                        zi[k] = c * zi[k] - s * f;
                    }
                }
                if (underflow) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

} // namespace

SymEigDecomposition sym_eig(const DenseMatrix& s) {
    const std::size_t n = s.rows();
    if (n != s.cols()) throw DimensionMismatch("sym_eig: matrix not square");

    double defect = 0.0;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i) {
            const double d = s(i, j) - s(j, i);
            defect += d * d;
        }
    defect = std::sqrt(2.0 * defect);
    if (defect > kTolSym * s.frobenius_norm())
        throw NotSymmetric("sym_eig: input is not symmetric within tolerance");

    SymEigDecomposition out;
    if (n == 0) return out;

    DenseMatrix z = s;
    // enforce exact symmetry before reduction
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i) {
            const double v = 0.5 * (z(i, j) + z(j, i));
            z(i, j) = z(j, i) = v;
        }
    std::vector<double> d, e;
    if (n == 1) {
        out.eigenvalues = {z(0, 0)};
        out.eigenvectors = DenseMatrix::identity(1);
        return out;
    }
    tred2(z, d, e);
    tqli(d, e, z);

    // sort ascending, carrying eigenvectors along
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });
    out.eigenvalues.resize(n);
    out.eigenvectors = DenseMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        out.eigenvalues[j] = d[perm[j]];
        const double* src = z.col(perm[j]);
        double* dst = out.eigenvectors.col(j);
        std::copy(src, src + n, dst);
    }
    return out;
}

DenseMatrix matrix_function(const DenseMatrix& s, const KernelFunction& phi,
                            double lambda_max) {
    const SymEigDecomposition eig = sym_eig(s);
    const double slack = kTolSpec * std::max(1.0, lambda_max);
    std::vector<double> fv(eig.eigenvalues.size());
    for (std::size_t i = 0; i < eig.eigenvalues.size(); ++i) {
        const double lam = eig.eigenvalues[i];
        if (lam < -slack || lam > lambda_max + slack)
            throw DomainError("matrix_function: eigenvalue outside [0, lambda_max]");
        fv[i] = phi.value(std::clamp(lam, 0.0, lambda_max));
    }
    const std::size_t n = s.rows();
    const DenseMatrix& v = eig.eigenvectors;
    DenseMatrix w(n, n);  // w = V diag(fv)
    for (std::size_t j = 0; j < n; ++j) {
        const double* vj = v.col(j);
        double* wj = w.col(j);
        for (std::size_t i = 0; i < n; ++i) wj[i] = vj[i] * fv[j];
    }
    DenseMatrix out(n, n);  // out = w V^T
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            const double vjk = v(j, k);
            const double* wk = w.col(k);
            double* oj = out.col(j);
            for (std::size_t i = 0; i < n; ++i) oj[i] += wk[i] * vjk;
        }
    // symmetrize away the last roundoff
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i) {
            const double m = 0.5 * (out(i, j) + out(j, i));
            out(i, j) = out(j, i) = m;
        }
    return out;
}

DenseMatrix solve_linear(const DenseMatrix& a, const DenseMatrix& b) {
    const std::size_t n = a.rows();
    if (n != a.cols()) throw DimensionMismatch("solve_linear: matrix not square");
    if (b.rows() != n) throw DimensionMismatch("solve_linear: rhs rows differ");

    const double scale = a.frobenius_norm();
    DenseMatrix lu = a;
    std::vector<std::size_t> piv(n);
    std::iota(piv.begin(), piv.end(), std::size_t{0});

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        double best = std::abs(lu(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            const double v = std::abs(lu(i, k));
            if (v > best) { best = v; p = i; }
        }
        if (best <= kTolRank * scale)
            throw Singular("solve_linear: pivot below rank tolerance");
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(lu(k, j), lu(p, j));
            std::swap(piv[k], piv[p]);
        }
        const double pivot = lu(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            lu(i, k) /= pivot;
            const double lik = lu(i, k);
            if (lik == 0.0) continue;
            for (std::size_t j = k + 1; j < n; ++j) lu(i, j) -= lik * lu(k, j);
        }
    }

    DenseMatrix x(n, b.cols());
    for (std::size_t c = 0; c < b.cols(); ++c) {
        double* xc = x.col(c);
        for (std::size_t i = 0; i < n; ++i) xc[i] = b(piv[i], c);
        for (std::size_t i = 1; i < n; ++i) {
            double s = xc[i];
            for (std::size_t j = 0; j < i; ++j) s -= lu(i, j) * xc[j];
            xc[i] = s;
        }
        for (std::size_t i = n; i-- > 0;) {
            double s = xc[i];
            for (std::size_t j = i + 1; j < n; ++j) s -= lu(i, j) * xc[j];
            xc[i] = s / lu(i, i);
        }
    }
    return x;
}

namespace {

void balance(DenseMatrix& a) {
    const std::size_t n = a.rows();
    const double radix = 2.0;
    const double sqrdx = radix * radix;
    bool done = false;
    while (!done) {
        done = true;
        for (std::size_t i = 0; i < n; ++i) {
            double r = 0.0, c = 0.0;
            for (std::size_t j = 0; j < n; ++j)
                if (j != i) {
                    c += std::abs(a(j, i));
                    r += std::abs(a(i, j));
                }
            if (c != 0.0 && r != 0.0) {
                double g = r / radix;
                double f = 1.0;
                const double s = c + r;
                while (c < g) { f *= radix; c *= sqrdx; }
                g = r * radix;
                while (c > g) { f /= radix; c /= sqrdx; }
                if ((c + r) / f < 0.95 * s) {
                    done = false;
                    g = 1.0 / f;
                    for (std::size_t j = 0; j < n; ++j) a(i, j) *= g;
                    for (std::size_t j = 0; j < n; ++j) a(j, i) *= f;
                }
            }
        }
    }
}

void to_hessenberg(DenseMatrix& a) {
    const std::size_t n = a.rows();
    if (n < 3) return;
    for (std::size_t m = 1; m + 1 < n; ++m) {
        double x = 0.0;
        std::size_t i = m;
        for (std::size_t j = m; j < n; ++j) {
            if (std::abs(a(j, m - 1)) > std::abs(x)) {
                x = a(j, m - 1);
                i = j;
            }
        }
        if (i != m) {
            for (std::size_t j = m - 1; j < n; ++j) std::swap(a(i, j), a(m, j));
            for (std::size_t j = 0; j < n; ++j) std::swap(a(j, i), a(j, m));
        }
        if (x != 0.0) {
            for (std::size_t k = m + 1; k < n; ++k) {
                double y = a(k, m - 1);
                if (y != 0.0) {
                    y /= x;
                    a(k, m - 1) = y;
                    for (std::size_t j = m; j < n; ++j) a(k, j) -= y * a(m, j);
                    for (std::size_t j = 0; j < n; ++j) a(j, m) += y * a(j, k);
                }
            }
        }
    }
    // the multipliers stored below the subdiagonal are not part of H
    for (std::size_t j = 0; j + 2 < n; ++j)
        for (std::size_t i = j + 2; i < n; ++i) a(i, j) = 0.0;
}

// Francis double-shift QR on an upper Hessenberg matrix; eigenvalues only.
std::vector<std::complex<double>> hqr(DenseMatrix& a) {
    const std::size_t n = a.rows();
    std::vector<std::complex<double>> out(n);
    if (n == 0) return out;

    double anorm = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = (i > 0 ? i - 1 : 0); j < n; ++j) anorm += std::abs(a(i, j));
    if (anorm == 0.0) anorm = 1.0;

    std::ptrdiff_t nn = static_cast<std::ptrdiff_t>(n) - 1;
    double t = 0.0;
    while (nn >= 0) {
        int its = 0;
        std::ptrdiff_t l;
        do {
            for (l = nn; l >= 1; --l) {
                double s = std::abs(a(l - 1, l - 1)) + std::abs(a(l, l));
                if (s == 0.0) s = anorm;
                if (std::abs(a(l, l - 1)) + s == s) {
                    a(l, l - 1) = 0.0;
                    break;
                }
            }
            double x = a(nn, nn);
            if (l == nn) {
                out[nn--] = {x + t, 0.0};
            } else {
                double y = a(nn - 1, nn - 1);
                double w = a(nn, nn - 1) * a(nn - 1, nn);
                if (l == nn - 1) {
                    double p = 0.5 * (y - x);
                    double q = p * p + w;
                    double z = std::sqrt(std::abs(q));
                    x += t;
                    if (q >= 0.0) {
                        z = p + sign_of(z, p);
                        out[nn - 1] = out[nn] = {x + z, 0.0};
                        if (z != 0.0) out[nn] = {x - w / z, 0.0};
                    } else {
                        out[nn] = {x + p, -z};
                        out[nn - 1] = std::conj(out[nn]);
                    }
                    nn -= 2;
                } else {
                    if (its == 30) throw Error("general_eigenvalues: QR failed to converge");
                    if (its == 10 || its == 20) {
                        t += x;
                        for (std::ptrdiff_t i = 0; i <= nn; ++i) a(i, i) -= x;
                        const double s = std::abs(a(nn, nn - 1)) + std::abs(a(nn - 1, nn - 2));
                        y = x = 0.75 * s;
                        w = -0.4375 * s * s;
                    }
                    ++its;
                    std::ptrdiff_t m;
                    double p = 0.0, q = 0.0, r = 0.0, z = 0.0;
                    for (m = nn - 2; m >= l; --m) {
                        z = a(m, m);
                        const double rr = x - z;
                        const double ss = y - z;
                        p = (rr * ss - w) / a(m + 1, m) + a(m, m + 1);
                        q = a(m + 1, m + 1) - z - rr - ss;
                        r = a(m + 2, m + 1);
                        const double s = std::abs(p) + std::abs(q) + std::abs(r);
                        p /= s;
                        q /= s;
                        r /= s;
                        if (m == l) break;
                        const double u = std::abs(a(m, m - 1)) * (std::abs(q) + std::abs(r));
                        const double v =
                            std::abs(p) * (std::abs(a(m - 1, m - 1)) + std::abs(z) + std::abs(a(m + 1, m + 1)));
                        if (u + v == v) break;
                    }
                    for (std::ptrdiff_t i = m + 2; i <= nn; ++i) {
                        a(i, i - 2) = 0.0;
                        if (i != m + 2) a(i, i - 3) = 0.0;
                    }
                    for (std::ptrdiff_t k = m; k <= nn - 1; ++k) {
                        if (k != m) {
                            p = a(k, k - 1);
                            q = a(k + 1, k - 1);
                            r = 0.0;
                            if (k != nn - 1) r = a(k + 2, k - 1);
                            x = std::abs(p) + std::abs(q) + std::abs(r);
                            if (x != 0.0) {
                                p /= x;
                                q /= x;
                                r /= x;
                            }
                        }
                        const double s = sign_of(std::sqrt(p * p + q * q + r * r), p);
                        if (s != 0.0) {
                            if (k == m) {
                                if (l != m) a(k, k - 1) = -a(k, k - 1);
                            } else {
                                a(k, k - 1) = -s * x;
                            }
                            p += s;
                            x = p / s;
                            y = q / s;
                            z = r / s;
                            q /= p;
                            r /= p;
                            for (std::ptrdiff_t j = k; j <= nn; ++j) {
                                p = a(k, j) + q * a(k + 1, j);
                                if (k != nn - 1) {
                                    p += r * a(k + 2, j);
                                    a(k + 2, j) -= p * z;
                                }
                                a(k + 1, j) -= p * y;
                                a(k, j) -= p * x;
                            }
                            const std::ptrdiff_t mmin = nn < k + 3 ? nn : k + 3;
                            for (std::ptrdiff_t i = l; i <= mmin; ++i) {
                                p = x * a(i, k) + y * a(i, k + 1);
                                if (k != nn - 1) {
                                    p += z * a(i, k + 2);
                                    a(i, k + 2) -= p * r;
                                }
                                a(i, k + 1) -= p * q;
                                a(i, k) -= p;
                            }
                        }
                    }
                }
            }
        } while (l < nn - 1);
    }
    return out;
}

} // namespace

std::vector<std::complex<double>> general_eigenvalues(const DenseMatrix& a) {
    const std::size_t n = a.rows();
    if (n != a.cols()) throw DimensionMismatch("general_eigenvalues: matrix not square");
    if (n > 128) throw SizeExceeded("general_eigenvalues: N > 128");
    if (n == 0) return {};
    if (n == 1) return {std::complex<double>(a(0, 0), 0.0)};

    DenseMatrix h = a;
    balance(h);
    to_hessenberg(h);
    auto eigs = hqr(h);
    std::sort(eigs.begin(), eigs.end(), [](const auto& x, const auto& y) {
        if (x.real() != y.real()) return x.real() < y.real();
        return x.imag() < y.imag();
    });
    return eigs;
}

} // namespace graphkrylov
