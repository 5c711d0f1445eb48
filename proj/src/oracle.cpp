#include "qeraser/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <array>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qeraser::oracle {

namespace {

constexpr int kMaxOracleAtoms = 12;
constexpr double kOffDiagonalTolerance = 1e-13;
constexpr double kHermiticityTolerance = 1e-10;
constexpr int kMaxSweeps = 100;

int popcount(std::size_t v) {
    int c = 0;
    while (v != 0) {
        c += static_cast<int>(v & 1u);
        v >>= 1;
    }
    return c;
}

}  // namespace

Matrix Matrix::adjoint() const {
    Matrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            out.at(c, r) = std::conj(at(r, c));
        }
    }
    return out;
}

complex Matrix::trace() const {
    complex t{0.0, 0.0};
    for (std::size_t r = 0; r < dim_; ++r) t += at(r, r);
    return t;
}

double Matrix::hermiticity_defect() const {
    double worst = 0.0;
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = r; c < dim_; ++c) {
            worst = std::max(worst, std::abs(at(r, c) - std::conj(at(c, r))));
        }
    }
    return worst;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    Matrix out(dim_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + rhs.data_[i];
    return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
    Matrix out(dim_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - rhs.data_[i];
    return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    Matrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t k = 0; k < dim_; ++k) {
            const complex v = at(r, k);
            if (v == complex{0.0, 0.0}) continue;
            for (std::size_t c = 0; c < dim_; ++c) {
                out.at(r, c) += v * rhs.at(k, c);
            }
        }
    }
    return out;
}

DenseState::DenseState(int n_atoms) : n_atoms_(n_atoms) {
    if (n_atoms < 0 || n_atoms > kMaxOracleAtoms) {
        throw std::invalid_argument("DenseState: atom count " + std::to_string(n_atoms) +
                                    " outside [0, " + std::to_string(kMaxOracleAtoms) + "]");
    }
    amplitudes_.assign(std::size_t{1} << (n_atoms + 2), complex{0.0, 0.0});
}

int DenseState::atom_bit(int i) const {
    if (i < 1 || i > n_atoms_) {
        throw std::out_of_range("DenseState: atom index " + std::to_string(i));
    }
    return n_atoms_ + 1 - i;
}

double DenseState::norm() const {
    double s = 0.0;
    for (const complex& c : amplitudes_) s += std::norm(c);
    return std::sqrt(s);
}

double DenseState::off_sector_weight() const {
    double w = 0.0;
    for (std::size_t idx = 0; idx < amplitudes_.size(); ++idx) {
        if (popcount(idx) != 1) w += std::norm(amplitudes_[idx]);
    }
    return w;
}

DenseState build_initial(int n_atoms) {
    DenseState state(n_atoms);
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    state[std::size_t{1} << state.mode_bit()] = inv_sqrt2;    // |g, 0...0, 1>
    state[std::size_t{1} << state.source_bit()] = inv_sqrt2;  // |e, 0...0, 0>
    return state;
}

DenseState jc_apply(const DenseState& state, int atom_index, double g_t) {
    if (!(g_t > 0.0) || !(g_t < std::numbers::pi / 2.0)) {
        throw std::invalid_argument("jc_apply: g_t = " + std::to_string(g_t) +
                                    " outside (0, pi/2)");
    }
    const std::size_t atom_mask = std::size_t{1} << state.atom_bit(atom_index);
    const std::size_t mode_mask = std::size_t{1} << state.mode_bit();
    const double c = std::cos(g_t);
    const complex ms{0.0, -std::sin(g_t)};

    DenseState next = state;
    for (std::size_t idx = 0; idx < state.dim(); ++idx) {
        // Enumerate each coupled pair once via its (atom ground, 1 photon)
        // member.
        if ((idx & atom_mask) != 0 || (idx & mode_mask) == 0) continue;
        const std::size_t partner = (idx & ~mode_mask) | atom_mask;
        const complex ground_photon = state[idx];
        const complex excited_vac = state[partner];
        next[idx] = c * ground_photon + ms * excited_vac;
        next[partner] = ms * ground_photon + c * excited_vac;
    }
    return next;
}

namespace {

std::vector<int> kept_bits(const DenseState& state, const SubsystemSet& keep) {
    std::vector<int> bits;
    if (keep.source) bits.push_back(state.source_bit());
    int previous = 0;
    bool first = true;
    for (int i : keep.atoms) {
        if (!first && i <= previous) {
            throw std::invalid_argument("partial_trace: atom labels must ascend");
        }
        bits.push_back(state.atom_bit(i));
        previous = i;
        first = false;
    }
    if (keep.mode) bits.push_back(state.mode_bit());
    if (bits.empty()) {
        throw std::invalid_argument("partial_trace: empty keep set");
    }
    return bits;
}

std::size_t scatter(std::size_t value, const std::vector<int>& bits) {
    // Spreads the low bits of `value` onto the given register bit positions,
    // most significant subsystem first.
    std::size_t out = 0;
    const std::size_t k = bits.size();
    for (std::size_t j = 0; j < k; ++j) {
        if ((value >> (k - 1 - j)) & 1u) out |= std::size_t{1} << bits[j];
    }
    return out;
}

}  // namespace

Matrix partial_trace(const DenseState& state, const SubsystemSet& keep) {
    const std::vector<int> bits = kept_bits(state, keep);

    std::vector<int> env_bits;
    for (int b = static_cast<int>(state.source_bit()); b >= 0; --b) {
        if (std::find(bits.begin(), bits.end(), b) == bits.end()) env_bits.push_back(b);
    }

    const std::size_t kept_dim = std::size_t{1} << bits.size();
    const std::size_t env_dim = std::size_t{1} << env_bits.size();
    Matrix rho(kept_dim);
    for (std::size_t e = 0; e < env_dim; ++e) {
        const std::size_t env_part = scatter(e, env_bits);
        for (std::size_t r = 0; r < kept_dim; ++r) {
            const complex ar = state[scatter(r, bits) | env_part];
            if (ar == complex{0.0, 0.0}) continue;
            for (std::size_t c = 0; c < kept_dim; ++c) {
                rho.at(r, c) += ar * std::conj(state[scatter(c, bits) | env_part]);
            }
        }
    }
    return rho;
}

Matrix partial_trace(const Matrix& rho, int n_qubits, const std::vector<int>& keep) {
    if (rho.dim() != (std::size_t{1} << n_qubits)) {
        throw std::invalid_argument("partial_trace: dimension is not 2^n_qubits");
    }
    std::vector<int> bits;  // register bit of each kept qubit, MSB order
    for (int label : keep) {
        if (label < 0 || label >= n_qubits) {
            throw std::invalid_argument("partial_trace: bad qubit label");
        }
        bits.push_back(n_qubits - 1 - label);
    }
    std::vector<int> env_bits;
    for (int b = n_qubits - 1; b >= 0; --b) {
        if (std::find(bits.begin(), bits.end(), b) == bits.end()) env_bits.push_back(b);
    }
    const std::size_t kept_dim = std::size_t{1} << bits.size();
    const std::size_t env_dim = std::size_t{1} << env_bits.size();
    Matrix out(kept_dim);
    for (std::size_t r = 0; r < kept_dim; ++r) {
        for (std::size_t c = 0; c < kept_dim; ++c) {
            complex sum{0.0, 0.0};
            for (std::size_t e = 0; e < env_dim; ++e) {
                const std::size_t env_part = scatter(e, env_bits);
                sum += rho.at(scatter(r, bits) | env_part, scatter(c, bits) | env_part);
            }
            out.at(r, c) = sum;
        }
    }
    return out;
}

namespace {

double off_diagonal_mass(const Matrix& a) {
    double mass = 0.0;
    for (std::size_t r = 0; r < a.dim(); ++r) {
        for (std::size_t c = 0; c < a.dim(); ++c) {
            if (r != c) mass += std::norm(a.at(r, c));
        }
    }
    return std::sqrt(mass);
}

// One cyclic sweep of two-sided Jacobi rotations.  Each pivot (p, q) is
// phased real and annihilated by the classic symmetric rotation; the same
// column operations accumulate into `vectors` when present.
void jacobi_sweep(Matrix& a, Matrix* vectors) {
    const std::size_t d = a.dim();
    for (std::size_t p = 0; p + 1 < d; ++p) {
        for (std::size_t q = p + 1; q < d; ++q) {
            const complex apq = a.at(p, q);
            const double m = std::abs(apq);
            if (m < 1e-300) continue;
            const complex phase = apq / m;
            const double app = a.at(p, p).real();
            const double aqq = a.at(q, q).real();
            const double tau = (aqq - app) / (2.0 * m);
            const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                             (std::abs(tau) + std::sqrt(1.0 + tau * tau));
            const double c = 1.0 / std::sqrt(1.0 + t * t);
            const double s = t * c;
            const complex sg = s * std::conj(phase);   // column mixing
            const complex sf = s * phase;              // row mixing

            for (std::size_t r = 0; r < d; ++r) {
                const complex arp = a.at(r, p);
                const complex arq = a.at(r, q);
                a.at(r, p) = c * arp - sg * arq;
                a.at(r, q) = s * arp + c * std::conj(phase) * arq;
            }
            for (std::size_t col = 0; col < d; ++col) {
                const complex apc = a.at(p, col);
                const complex aqc = a.at(q, col);
                a.at(p, col) = c * apc - sf * aqc;
                a.at(q, col) = s * apc + c * phase * aqc;
            }
            a.at(p, q) = 0.0;
            a.at(q, p) = 0.0;
            a.at(p, p) = a.at(p, p).real();
            a.at(q, q) = a.at(q, q).real();

            if (vectors != nullptr) {
                for (std::size_t r = 0; r < d; ++r) {
                    const complex vrp = vectors->at(r, p);
                    const complex vrq = vectors->at(r, q);
                    vectors->at(r, p) = c * vrp - sg * vrq;
                    vectors->at(r, q) = s * vrp + c * std::conj(phase) * vrq;
                }
            }
        }
    }
}

std::pair<std::vector<double>, Matrix> jacobi_diagonalize(const Matrix& h, bool want_vectors) {
    if (h.hermiticity_defect() > kHermiticityTolerance) {
        throw std::invalid_argument("jacobi: input is not Hermitian");
    }
    const std::size_t d = h.dim();
    // Symmetrize away representation roundoff before iterating.
    Matrix a(d);
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            a.at(r, c) = 0.5 * (h.at(r, c) + std::conj(h.at(c, r)));
        }
    }
    Matrix vectors(d);
    if (want_vectors) {
        for (std::size_t r = 0; r < d; ++r) vectors.at(r, r) = 1.0;
    }

    int sweeps = 0;
    while (off_diagonal_mass(a) > kOffDiagonalTolerance) {
        if (++sweeps > kMaxSweeps) {
            throw std::runtime_error("jacobi: no convergence after " +
                                     std::to_string(kMaxSweeps) + " sweeps");
        }
        jacobi_sweep(a, want_vectors ? &vectors : nullptr);
    }

    std::vector<double> eigenvalues(d);
    for (std::size_t r = 0; r < d; ++r) eigenvalues[r] = a.at(r, r).real();

    std::vector<std::size_t> order(d);
    for (std::size_t i = 0; i < d; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return eigenvalues[x] < eigenvalues[y];
    });
    std::vector<double> sorted(d);
    Matrix sorted_vectors(d);
    for (std::size_t i = 0; i < d; ++i) {
        sorted[i] = eigenvalues[order[i]];
        if (want_vectors) {
            for (std::size_t r = 0; r < d; ++r) {
                sorted_vectors.at(r, i) = vectors.at(r, order[i]);
            }
        }
    }
    return {std::move(sorted), std::move(sorted_vectors)};
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const Matrix& h) {
    return jacobi_diagonalize(h, false).first;
}

std::pair<std::vector<double>, Matrix> hermitian_eigensystem(const Matrix& h) {
    return jacobi_diagonalize(h, true);
}

double trace_norm(const Matrix& h) {
    double sum = 0.0;
    for (double ev : hermitian_eigenvalues(h)) sum += std::abs(ev);
    return sum;
}

ConditionalDecomposition conditional_decomposition(const DenseState& state,
                                                   const SubsystemSet& probe) {
    if (probe.source) {
        throw std::invalid_argument("conditional_decomposition: probe must exclude the source");
    }
    SubsystemSet keep = probe;
    keep.source = true;
    const Matrix rho = partial_trace(state, keep);
    const std::size_t probe_dim = rho.dim() / 2;

    ConditionalDecomposition out;
    Matrix ground(probe_dim), excited(probe_dim), cross(probe_dim);
    for (std::size_t r = 0; r < probe_dim; ++r) {
        for (std::size_t c = 0; c < probe_dim; ++c) {
            ground.at(r, c) = rho.at(r, c);
            excited.at(r, c) = rho.at(probe_dim + r, probe_dim + c);
            cross.at(r, c) = rho.at(probe_dim + r, c);  // |e><g| block
        }
    }
    out.w1 = ground.trace().real();
    out.w2 = excited.trace().real();
    out.rho_e_1 = Matrix(probe_dim);
    out.rho_e_2 = Matrix(probe_dim);
    out.chi = Matrix(probe_dim);
    const double root = std::sqrt(std::max(out.w1 * out.w2, 0.0));
    for (std::size_t r = 0; r < probe_dim; ++r) {
        for (std::size_t c = 0; c < probe_dim; ++c) {
            if (out.w1 > 0.0) out.rho_e_1.at(r, c) = ground.at(r, c) / out.w1;
            if (out.w2 > 0.0) out.rho_e_2.at(r, c) = excited.at(r, c) / out.w2;
            if (root > 0.0) out.chi.at(r, c) = cross.at(r, c) / root;
        }
    }
    return out;
}

double distinguishability_bruteforce(const DenseState& state, const SubsystemSet& probe) {
    const ConditionalDecomposition d = conditional_decomposition(state, probe);
    const std::size_t dim = d.rho_e_1.dim();
    Matrix difference(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            difference.at(r, c) = d.w1 * d.rho_e_1.at(r, c) - d.w2 * d.rho_e_2.at(r, c);
        }
    }
    return trace_norm(difference);
}

double wootters_concurrence(const Matrix& rho) {
    if (rho.dim() != 4) {
        throw std::invalid_argument("wootters_concurrence: expected a 4x4 density matrix");
    }
    // Square-rooted eigenvalues of rho * rho~ equal the singular values of the
    // symmetric matrix tau_ij = w_i^T (sigma_y x sigma_y) w_j built on the
    // subnormalized eigenvectors w_i = sqrt(l_i) v_i.  Restricting tau to the
    // numerically nonzero spectrum keeps exact zeros exact instead of lifting
    // them to sqrt(roundoff).
    auto [evals, vecs] = hermitian_eigensystem(rho);
    std::vector<std::array<complex, 4>> w;
    for (std::size_t k = 0; k < 4; ++k) {
        if (evals[k] <= 1e-12) continue;
        const double scale = std::sqrt(evals[k]);
        w.push_back({scale * vecs.at(0, k), scale * vecs.at(1, k), scale * vecs.at(2, k),
                     scale * vecs.at(3, k)});
    }
    if (w.empty()) return 0.0;

    // sigma_y (x) sigma_y is the antidiagonal (-1, 1, 1, -1).
    const auto spin_flip = [](const std::array<complex, 4>& v) {
        return std::array<complex, 4>{-v[3], v[2], v[1], -v[0]};
    };
    const std::size_t rank = w.size();
    Matrix tau(rank);
    for (std::size_t i = 0; i < rank; ++i) {
        const std::array<complex, 4> flipped = spin_flip(w[i]);
        for (std::size_t j = 0; j < rank; ++j) {
            complex entry{0.0, 0.0};
            for (std::size_t k = 0; k < 4; ++k) entry += w[j][k] * flipped[k];
            tau.at(i, j) = entry;
        }
    }
    std::vector<double> mu = hermitian_eigenvalues(tau.adjoint() * tau);
    std::sort(mu.begin(), mu.end(), std::greater<>());
    double concurrence = std::sqrt(std::max(mu[0], 0.0));
    for (std::size_t k = 1; k < rank; ++k) {
        concurrence -= std::sqrt(std::max(mu[k], 0.0));
    }
    return std::max(0.0, concurrence);
}

std::pair<double, double> visibility_predictability_bruteforce(const Matrix& rho_source) {
    if (rho_source.dim() != 2) {
        throw std::invalid_argument(
            "visibility_predictability_bruteforce: expected a 2x2 density matrix");
    }
    const double visibility = 2.0 * std::abs(rho_source.at(0, 1));
    const double predictability =
        std::abs(rho_source.at(1, 1).real() - rho_source.at(0, 0).real());
    return {visibility, predictability};
}

std::pair<DenseState, double> project_bruteforce(const DenseState& state,
                                                 const MeasurementBasis& basis) {
    if (basis.size() != state.n_atoms()) {
        throw std::invalid_argument("project_bruteforce: basis/register size mismatch");
    }
    DenseState projected = state;
    for (int i = 1; i <= state.n_atoms(); ++i) {
        const std::size_t mask = std::size_t{1} << projected.atom_bit(i);
        const double alpha = basis.alpha(i - 1);
        const complex beta = basis.beta(i - 1);
        for (std::size_t idx = 0; idx < projected.dim(); ++idx) {
            if ((idx & mask) != 0) continue;
            const complex overlap =
                alpha * projected[idx] + std::conj(beta) * projected[idx | mask];
            projected[idx] = alpha * overlap;
            projected[idx | mask] = beta * overlap;
        }
    }
    const double probability = projected.norm() * projected.norm();
    if (probability <= 1e-15) {
        throw std::invalid_argument("project_bruteforce: outcome probability vanishes");
    }
    const double scale = 1.0 / std::sqrt(probability);
    for (std::size_t idx = 0; idx < projected.dim(); ++idx) projected[idx] *= scale;
    return {std::move(projected), probability};
}

}  // namespace qeraser::oracle
