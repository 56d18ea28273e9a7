#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "dfmsyn/geometry.hpp"
#include "dfmsyn/plant.hpp"

namespace dfmsyn {

/// Input slot for a (u, y) pair in the transition table:
/// (u=0,y=-1) (u=0,y=+1) (u=1,y=-1) (u=1,y=+1).
inline int input_slot(int u, int y) { return u * 2 + (y > 0 ? 1 : 0); }

/// The reachable deterministic finite state machine abstracting a plant
/// over a circle partition. states[0] is the full circle q0; tables cover
/// reachable states only, in BFS discovery order.
struct AbstractMachine {
  Partition partition;
  std::vector<Arc> states;
  std::vector<std::array<int, 4>> trans;      // indexed by input_slot
  std::vector<int> g_out;                      // predicted sensor, -1/+1
  std::vector<std::array<double, 2>> h_out;    // worst-case log10 gain per u
  std::vector<std::uint8_t> d_flag;            // 1 when the arc straddles both halves
  long diag_disconnected = 0;

  explicit AbstractMachine(Partition p) : partition(std::move(p)) {}

  int num_states() const { return static_cast<int>(states.size()); }
  int step(int q, int u, int y) const {
    return trans[static_cast<size_t>(q)][static_cast<size_t>(input_slot(u, y))];
  }
};

/// One abstract transition: refine q by the half circle of sign y_tilde,
/// push the result through mode u, cover with partition intervals. An empty
/// refinement (contradictory y_tilde for a one-sided arc) maps the
/// unrefined q so the machine stays total. A disconnected refinement bumps
/// *disconnected, when given.
Arc hat_f(const Partition& p, const Plant& plant, const Arc& q, int u, int y_tilde,
          long* disconnected = nullptr);

/// Predicted sensor output: +1 when the arc's +1-signed portion is at
/// least as long as its -1-signed portion (true set lengths, exact ties
/// resolve to +1), -1 otherwise.
int hat_g(const Partition& p, const Arc& q);

/// sup over the closure of q of log10 |f_u(beta(theta))|. Matrix modes use
/// the closed form |A beta(theta)|^2 = m + p cos 2theta + s sin 2theta
/// maximized at endpoints and interior stationary angles; generic modes
/// fall back to a dense grid.
double hat_h(const Partition& p, const Plant& plant, const Arc& q, int u);

/// 0 when q lies inside a single sensor half circle, 1 otherwise.
int d_of(const Partition& p, const Arc& q);

/// Breadth-first construction of the reachable machine from q0 under all
/// four (u, y) input combinations.
AbstractMachine build_machine(const Plant& plant, const Partition& p);

}  // namespace dfmsyn
