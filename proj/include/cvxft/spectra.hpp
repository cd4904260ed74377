#ifndef CVXFT_SPECTRA_HPP
#define CVXFT_SPECTRA_HPP

#include "cvxft/packing.hpp"
#include "cvxft/transform.hpp"
#include "cvxft/zeroset.hpp"

#include <string>
#include <vector>

namespace cvxft {

// Restriction of a putative spectrum to a ball: exponentials e^{2 pi i x.lambda}
// are pairwise orthogonal over the body iff all differences lie in Z_Omega.
struct CandidateSpectrum {
    Body body;
    std::vector<Vec> points;
    std::string generator; // "cube-lattice" | "user-supplied"
};

// |chi_hat(lambda - mu)|; zero iff the two exponentials are orthogonal.
// Uses the closed form when the body admits it, the Herz route otherwise.
double pair_orthogonality(const Body& body, const Vec& lambda, const Vec& mu);
double pair_orthogonality(const Body& body, const Vec& lambda, const Vec& mu, Method method,
                          int resolution);

// (1/(2s)) Z^d intersected with B, the lattice spectrum of the cube of half-side s.
CandidateSpectrum lattice_spectrum(const Body& cube, const Ball& B);

// minimum pairwise distance, grid-hash accelerated
double min_gap(const std::vector<Vec>& points);

std::vector<std::size_t> density_count(const std::vector<Vec>& points,
                                       const std::vector<Ball>& balls);

// Output of the translated-spectrum pipeline: a subset of X_{Omega,eta,B}
// obtained as (B2 cap Lambda) - lambda2, with certified entropy bounds.
struct Prop02Result {
    Vec eta;               // lambda2 - lambda1, |eta| in [0.5, 2]
    Vec lambda1, lambda2;
    Ball B;                // radius R at the origin
    Ball B1, B2;           // radius R/2; B1 - B2 inside B by construction
    std::vector<Vec> points;
    std::size_t entropy_lower = 0;
    std::size_t entropy_upper = 0;
    double max_orthogonality_residual = 0.0; // over both xi and xi+eta checks
};

Prop02Result prop02_pipeline(const Body& body, const CandidateSpectrum& spectrum, double R);

} // namespace cvxft

#endif
