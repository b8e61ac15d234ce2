#include "specband/inverse.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "specband/errors.hpp"
#include "specband/kernels.hpp"

namespace specband {

std::vector<const NullGenerator*> ReconstructionState::degeneration_generators()
    const {
  std::vector<const NullGenerator*> out;
  for (const auto& g : generators)
    if (g.pre_exhaustion) out.push_back(&g);
  return out;
}

namespace {

bool slot_is_shifted_generator(long height, int n,
                               const std::vector<NullGenerator>& generators) {
  for (const auto& g : generators) {
    const long diff = height - g.height;
    if (diff >= n && diff % n == 0) return true;
  }
  return false;
}

}  // namespace

ReconstructionState gram_schmidt_reconstruct(
    const MatrixMeasure& sigma, const ReconstructionOptions& options) {
  validate_measure(sigma, 0);
  const int n = sigma.dim();
  const int atoms = sigma.atom_count();
  const double* wflat = sigma.weights_flat().data();

  ReconstructionState state;
  state.n = n;
  state.total_rank = sigma.total_rank();
  state.atom_count = atoms;

  // Spectral norm of every weight, for the zero-decision scale.
  std::vector<double> wnorm(atoms, 0.0);
  for (int l = 0; l < atoms; ++l) {
    const auto ev = kernels::sym_eigenvalues(sigma.atom(l).weight, n);
    wnorm[l] = std::max(std::abs(ev.front()), std::abs(ev.back()));
  }

  auto wdot = [&](const std::vector<double>& a, const std::vector<double>& b) {
    return kernels::weighted_dot(a.data(), b.data(), wflat, atoms, n,
                                 options.threads);
  };

  // Once no residue class is free the loop can only skip; n generators stop
  // it before that. The hard cap is just a tripwire.
  const long slot_cap =
      static_cast<long>(n) * (options.k_max + n + 2) + state.total_rank + n;

  for (int k = 1;
       state.p_count() < options.k_max &&
       static_cast<int>(state.generators.size()) < n && k <= slot_cap;
       ++k) {
    state.slots_visited = k;
    const long slot_height = k - 1;
    if (slot_is_shifted_generator(slot_height, n, state.generators)) {
      if (options.verify_skips) {
        // The skipped slot carries z^l q_i; its class must test zero.
        for (const auto& g : state.generators) {
          const long diff = slot_height - g.height;
          if (diff >= n && diff % n == 0) {
            VectorPolynomial shifted = g.poly;
            for (long step = 0; step < diff / n; ++step)
              shifted = shift(shifted);
            if (!is_zero_class(shifted, sigma, options.eps_zero))
              throw Error("skipped canonical slot " + std::to_string(k) +
                          " is not in the zero class");
            break;
          }
        }
      }
      continue;
    }

    // Candidate of height k-1 with positive leading coefficient.
    VectorPolynomial cand_poly(n);
    std::vector<double> cand_vals(static_cast<size_t>(atoms) * n, 0.0);
    if (slot_height < n) {
      cand_poly = canonical(k, n);
      for (int l = 0; l < atoms; ++l)
        cand_vals[static_cast<size_t>(l) * n + slot_height] = 1.0;
    } else {
      int src = 0;
      for (int i = 0; i < state.p_count(); ++i)
        if (state.heights[i] == slot_height - n) {
          src = i + 1;
          break;
        }
      if (src == 0)
        throw Error("no polynomial of height " +
                    std::to_string(slot_height - n) +
                    " to seed slot " + std::to_string(k));
      cand_poly = shift(state.orthonormal[src - 1]);
      const auto& sv = state.values[src - 1];
      for (int l = 0; l < atoms; ++l) {
        const double x = sigma.atom(l).x;
        for (int c = 0; c < n; ++c)
          cand_vals[static_cast<size_t>(l) * n + c] =
              x * sv[static_cast<size_t>(l) * n + c];
      }
    }

    double cand_scale = 0.0;
    for (int l = 0; l < atoms; ++l) {
      double v2 = 0.0;
      for (int c = 0; c < n; ++c) {
        const double v = cand_vals[static_cast<size_t>(l) * n + c];
        v2 += v * v;
      }
      cand_scale += v2 * wnorm[l];
    }

    // Modified Gram-Schmidt, coefficients tracked alongside the values.
    VectorPolynomial hat_poly = cand_poly;
    std::vector<double> hat_vals = cand_vals;
    for (int pass = 0; pass < 2; ++pass)
      for (int i = 0; i < state.p_count(); ++i) {
        const double proj = wdot(state.values[i], hat_vals);
        if (proj == 0.0) continue;
        hat_poly = add(hat_poly, scale(-proj, state.orthonormal[i]));
        const auto& pv = state.values[i];
        for (size_t idx = 0; idx < hat_vals.size(); ++idx)
          hat_vals[idx] -= proj * pv[idx];
      }

    const double nu = std::max(0.0, wdot(hat_vals, hat_vals));
    const double eps2 = options.eps_zero * options.eps_zero;

    if (nu <= eps2 * cand_scale) {
      NullGenerator g{hat_poly, slot_height,
                      state.p_count() < state.total_rank};
      state.generators.push_back(std::move(g));
      continue;
    }
    if (nu <= 100.0 * eps2 * cand_scale)
      throw ToleranceAmbiguous(k, cand_scale > 0.0 ? nu / cand_scale : nu);

    const double inv = 1.0 / std::sqrt(nu);
    VectorPolynomial p = scale(inv, hat_poly);
    for (double& v : hat_vals) v *= inv;
    // The candidate's leading slot is untouched by the projections, so the
    // family keeps positive leading coefficients; anything else means the
    // arithmetic went wrong.
    if (!(p.leading_coefficient() > 0.0))
      throw Error("orthonormal polynomial lost its positive leading "
                  "coefficient at slot " +
                  std::to_string(k));
    state.heights.push_back(slot_height);
    state.orthonormal.push_back(std::move(p));
    state.values.push_back(std::move(hat_vals));
  }
  return state;
}

CoefficientTable recover_coefficients(const ReconstructionState& state,
                                      const MatrixMeasure& sigma,
                                      int threads) {
  const int K = state.p_count();
  if (K < state.n + 1)
    throw InsufficientPrefix("need at least n+1 orthonormal polynomials");
  if (sigma.atom_count() != state.atom_count)
    throw DimensionMismatch(
        "reconstruction state was built from a different measure");

  const int n = state.n;
  const int atoms = sigma.atom_count();
  CoefficientTable table;
  table.n = n;
  table.size = K;
  table.certified_rows = K - n;
  table.c.assign(static_cast<size_t>(K) * K, 0.0);

  // Node values of z * p_k, straight from the stored tables.
  std::vector<std::vector<double>> shifted(K);
  for (int k = 0; k < K; ++k) {
    shifted[k].resize(static_cast<size_t>(atoms) * n);
    for (int l = 0; l < atoms; ++l) {
      const double x = sigma.atom(l).x;
      for (int c = 0; c < n; ++c)
        shifted[k][static_cast<size_t>(l) * n + c] =
            x * state.values[k][static_cast<size_t>(l) * n + c];
    }
  }

  for (int l = 1; l <= K; ++l)
    for (int k = 1; k <= K; ++k)
      table.c[static_cast<size_t>(l - 1) * K + (k - 1)] = kernels::weighted_dot(
          state.values[l - 1].data(), shifted[k - 1].data(),
          sigma.weights_flat().data(), atoms, n, threads);

  for (int l = 0; l < K; ++l)
    for (int k = l + 1; k < K; ++k) {
      const double a = table.c[static_cast<size_t>(l) * K + k];
      const double b = table.c[static_cast<size_t>(k) * K + l];
      table.symmetry_deviation =
          std::max(table.symmetry_deviation, std::abs(a - b));
      const double avg = 0.5 * (a + b);
      table.c[static_cast<size_t>(l) * K + k] = avg;
      table.c[static_cast<size_t>(k) * K + l] = avg;
    }

  for (int l = 1; l <= K; ++l)
    for (int k = 1; k <= table.certified_rows; ++k)
      table.max_abs = std::max(table.max_abs, std::abs(table.at(l, k)));
  for (int l = 1; l <= K; ++l)
    for (int k = 1; k <= K; ++k)
      if (std::abs(l - k) > state.n)
        table.max_out_of_band =
            std::max(table.max_out_of_band, std::abs(table.at(l, k)));
  return table;
}

AssembledMatrix assemble_matrix(const CoefficientTable& table, int n) {
  if (table.n != n)
    throw DimensionMismatch("coefficient table was built for n = " +
                            std::to_string(table.n));
  const int N = table.size;
  const double tol = 1e-8 * table.max_abs;

  std::vector<std::vector<double>> diagonals(n + 1);
  for (int i = 0; i <= n; ++i) {
    diagonals[i].resize(std::max(0, N - i));
    for (int k = 1; k <= N - i; ++k) {
      double v = table.at(k + i, k);
      if (std::abs(v) < tol) v = 0.0;
      diagonals[i][k - 1] = v;
    }
  }
  BandMatrix matrix(n, N, std::move(diagonals));
  try {
    DegenerationProfile profile = validate(matrix);
    return AssembledMatrix{std::move(matrix), std::move(profile),
                           table.certified_rows, tol};
  } catch (const Error& e) {
    throw ClassViolation(std::string("assembled matrix fails class "
                                     "validation: ") +
                         e.what());
  }
}

std::vector<int> detect_degenerations(const ReconstructionState& state) {
  std::vector<int> m;
  for (const auto* g : state.degeneration_generators()) {
    const long target = g->height - state.n;
    int found = 0;
    for (int k = 0; k < state.p_count(); ++k)
      if (state.heights[k] == target) {
        found = k + 1;
        break;
      }
    if (found == 0)
      throw NoMatchingHeight("no orthonormal polynomial sits n below the "
                             "generator at height " +
                             std::to_string(g->height));
    m.push_back(found);
  }
  std::sort(m.begin(), m.end());
  return m;
}

InitialConditions extract_T(const ReconstructionState& state) {
  const int n = state.n;
  if (state.p_count() < n)
    throw InsufficientPrefix("need n orthonormal polynomials to extract the "
                             "initial conditions");
  std::vector<double> rows(static_cast<size_t>(n) * n, 0.0);
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j)
      rows[static_cast<size_t>(j) * n + k] = state.orthonormal[k].coeff(0, j);
  return InitialConditions(n, std::move(rows));
}

CholeskyOracleResult cholesky_oracle(const MatrixMeasure& sigma, int K,
                                     double eps_zero, int threads) {
  validate_measure(sigma, 0);
  const int n = sigma.dim();
  // Gram matrix of the canonical family from moments alone:
  // <e_{n a + i}, e_{n b + j}> = S_{a+b}[i][j].
  const int max_power = 2 * ((K - 1) / n);
  const MomentSequence seq = moments_upto(sigma, max_power, threads);

  std::vector<double> gram(static_cast<size_t>(K) * K, 0.0);
  for (int r = 0; r < K; ++r)
    for (int c = 0; c < K; ++c) {
      const int ka = r / n, ia = r % n;
      const int kb = c / n, ib = c % n;
      gram[static_cast<size_t>(r) * K + c] = seq.s[ka + kb][ia * n + ib];
    }
  auto apply_gram = [&](const std::vector<double>& v) {
    std::vector<double> gv(K, 0.0);
    for (int r = 0; r < K; ++r) {
      double row = 0.0;
      for (int c = 0; c < K; ++c)
        row += gram[static_cast<size_t>(r) * K + c] * v[c];
      gv[r] = row;
    }
    return gv;
  };

  CholeskyOracleResult out;
  std::vector<std::vector<double>> basis;   // coefficient rows, orthonormal
  std::vector<std::vector<double>> gbasis;  // cached G * u per basis row
  for (int slot = 0; slot < K; ++slot) {
    std::vector<double> v(K, 0.0);
    v[slot] = 1.0;
    for (int pass = 0; pass < 2; ++pass)
      for (size_t b = 0; b < basis.size(); ++b) {
        double proj = 0.0;
        for (int c = 0; c < K; ++c) proj += gbasis[b][c] * v[c];
        for (int c = 0; c < K; ++c) v[c] -= proj * basis[b][c];
      }
    const std::vector<double> gv = apply_gram(v);
    double pivot = 0.0;
    for (int c = 0; c < K; ++c) pivot += v[c] * gv[c];
    pivot = std::max(0.0, pivot);
    const double diag = gram[static_cast<size_t>(slot) * K + slot];
    if (pivot <= eps_zero * eps_zero * std::max(diag, 1e-300)) {
      out.zero_pivot_slots.push_back(slot + 1);
      continue;
    }
    const double inv = 1.0 / std::sqrt(pivot);
    for (double& c : v) c *= inv;
    gbasis.push_back(apply_gram(v));
    basis.push_back(v);
    // Reassemble the polynomial from its canonical coordinates.
    VectorPolynomial p(n);
    for (int c = 0; c <= slot; ++c)
      if (v[c] != 0.0) p = add(p, scale(v[c], canonical(c + 1, n)));
    out.orthonormal.push_back(std::move(p));
  }
  return out;
}

long certified_moment_order(const ReconstructionState& state) {
  if (state.p_count() == 0) return 0;
  const long h = state.heights.back();
  return (2 * h + state.n - 1) / state.n;
}

}  // namespace specband
