#pragma once

#include "evenwalks/walk.hpp"

namespace evenwalks {
namespace examples {

/// Two 8-step walks sharing the staircase marked pattern and the same
/// intersection partition; the first is fully reducible, the second is not.
Walk tree_like_w8();
Walk irreducible_w8();

/// 16-step walk with two open and one closed self-intersection; four
/// removals leave irreducible_w8 with one surviving break instant at t=4.
Walk two_open_one_closed_w16();

/// Family with q imported blocks at one vertex: the hub keeps
/// self-intersection degree 1 while its exit degree grows as 4q+1 when
/// decorated (three extra round trips per block) or q+1 when plain. The
/// contour tree's exit degrees stay bounded for every q.
Walk imported_cell_walk(int q, bool decorated = true);

}  // namespace examples
}  // namespace evenwalks
