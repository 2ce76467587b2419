#pragma once

#include "ncfact/group_spec.hpp"
#include "ncfact/qphi.hpp"

namespace ncfact {

/// Cartan matrix (a_ij = <alpha_i^vee, alpha_j>) of an exceptional Coxeter
/// type, Bourbaki node numbering. H3/H4 use the symmetric matrix with
/// entries -phi on the 5-labelled edge. The same data are shipped in
/// data/root_data.txt.
QPhiMatrix cartan_matrix(Family family);

/// s_i(v) = v - (sum_j a_ij v_j) alpha_i, coordinates in the simple-root basis.
QPhiVector simple_reflection(const QPhiMatrix& cartan, int i, const QPhiVector& v);

/// Closure of the simple roots under the simple reflections. The first
/// rank entries are the simple roots; the rest follow in breadth-first order.
QPhiMatrix generate_roots(const QPhiMatrix& cartan);

}  // namespace ncfact
