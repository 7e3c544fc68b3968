#pragma once

#include <cstdint>
#include <vector>

#include "ctoda/chevalley.hpp"

namespace ctoda {

/// Frame values (omega(e1), omega(e2)) of a g-valued 1-form on a tangent
/// frame. All the identities checked here are pointwise tensorial, so a
/// 2-form is represented by its single frame evaluation.
struct CyclicFrame {
  LieElement u, v;
};

/// Evaluation of alpha ^ beta on the frame for two 1-forms:
/// [a1, b2] - [a2, b1].
LieElement wedge11(const ChevalleyData& cd, const CyclicFrame& a, const CyclicFrame& b);

/// gamma ^ beta for a 0-form gamma against a 1-form: the bracket pointwise.
CyclicFrame wedge01(const ChevalleyData& cd, const LieElement& g, const CyclicFrame& b);

/// Killing pairing of two 1-forms as a 2-form on the frame:
/// Kill(a1, b2) - Kill(a2, b1).
ExactScalar killing11(const ChevalleyData& cd, const CyclicFrame& a, const CyclicFrame& b);

/// Componentwise projection of a frame.
CyclicFrame project_frame(const ChevalleyData& cd, const CyclicFrame& f, Subspace tag);
CyclicFrame project_frame_root(const ChevalleyData& cd, const CyclicFrame& f, int root_idx);

/// Seeded random frames with integer coefficients in [-3, 3].
std::vector<CyclicFrame> random_frames(const ChevalleyData& cd, int count, std::uint64_t seed,
                                       bool gaussian_integers = false);

/// The cyclic-sum combinatorics behind the bracket table: no two distinct
/// pairs of cyclic roots share a root sum, and Z + Z avoids Z.
std::vector<CheckEntry> verify_cyclic_sum_property(const RootSystemData& rs);

/// The nine bracket inclusions among h, g_Z, g_Zdag and g_1, checked on all
/// basis pairs with exact projections.
std::vector<CheckEntry> verify_bracket_table(const ChevalleyData& cd);

/// Killing orthogonality of the cyclic decomposition.
std::vector<CheckEntry> verify_decomposition_orthogonality(const ChevalleyData& cd);

/// The three cyclic-decomposition identities of the wedge square, the
/// graded Jacobi identity and the Killing exchange rule, plus the partition
/// of identity, on basis-pair frames and seeded random frames.
std::vector<CheckEntry> verify_cyclic_dec_identities(const ChevalleyData& cd, int random_count,
                                                     std::uint64_t seed);

/// The Lie-algebra kernels of the rigidity argument:
///  K1: [[g_Zdag, g_Zdag], g_Z] stays in g_Zdag;
///  K2 (A2): [x_-a, [x_-eta, x_a]] = [x_-b, [x_-eta, x_b]] != 0;
///  K3: every simple root has a simple partner summing to a root;
///  K4 (not A2): some simple alpha has eta - alpha a positive root
///      outside Z and Zdag.
std::vector<CheckEntry> verify_rigidity_kernels(const ChevalleyData& cd);

}  // namespace ctoda
