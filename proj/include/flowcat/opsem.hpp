#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "flowcat/field_matrix.hpp"
#include "flowcat/poly_matrix.hpp"
#include "flowcat/term.hpp"

namespace flowcat {

/// The per-tick transition relation of a term: the kernel of `constraint`,
/// whose columns are ordered (u | v | r | r') with u the m left-boundary
/// values, v the n right-boundary values, r the registers before the tick and
/// r' after it.
struct StepRelation {
  std::size_t m = 0, n = 0, d = 0;
  FieldMatrix constraint;
};

/// Compiles the structural rules: each generator contributes its linear
/// constraints, sequential composition projects out the shared wires, and
/// tensor concatenates.
StepRelation step_relation(const TypedTerm& t, Field field);

/// Boundary values on ticks t0..t1 and register values on t0..t1+1.
/// `registers` may be left empty when only the boundary is known.
struct TraceWindow {
  long t0 = 0, t1 = -1;
  std::vector<FieldVector> u, v;
  std::vector<FieldVector> registers;

  std::size_t length() const { return u.size(); }
};

enum class Direction { forward, backward };

/// Known wire values for one tick; std::nullopt entries are unknown. An empty
/// vector leaves the whole side unknown.
struct TickInput {
  std::vector<std::optional<Scalar>> u, v;
};

/// Runs `steps` ticks from register assignment `init`. Forward runs cover
/// ticks 0..steps-1 starting at init; backward runs cover -steps..-1 ending at
/// init (the swapped delay rules are the same relation read in reverse).
/// inputs[k] constrains the k-th tick computed. Unknowns left free by the
/// relation are set to zero. Returns std::nullopt if some tick's constraints
/// are inconsistent; throws std::invalid_argument on size mismatches.
std::optional<TraceWindow> simulate(const TypedTerm& t, Field field, const FieldVector& init,
                                    const std::vector<TickInput>& inputs, std::size_t steps,
                                    Direction direction);

/// Every tick satisfies the step relation. When the window carries no
/// registers, they are solved for (existentially, edges unconstrained).
bool check_window_trace(const TypedTerm& t, Field field, const TraceWindow& w);

/// Boundary windows of length L (ordered tick-major, (u, v) within a tick)
/// that are restrictions of biinfinite traces. Registers are unrolled over
/// d extra ticks on each side, which is exact: the sets of states with j-step
/// histories (or futures) shrink at most d times before stabilizing.
Subspace opsem_window_set(const TypedTerm& t, Field field, std::size_t L);

/// Restriction to ticks 0..L-1 of ker(kernel_rep), computed by solving the
/// difference equations on an enlarged window and projecting. The margin
/// grows until the projected dimension repeats and exceeds the state bound
/// (sum of row spans plus the largest span).
Subspace window_behavior(const PolyMatrix& kernel_rep, std::size_t L);

}  // namespace flowcat
