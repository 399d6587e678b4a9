#pragma once

#include <vector>

#include "ehrlift/linalg.hpp"

namespace ehrlift {

// a.x <= b (inequality) or a.x == b (equation); a integer primitive.
struct Facet {
    ZVec a;
    Rat b;
};

// x in P iff all inequalities and equations hold; relative interior iff all
// inequalities strict. Equations appear only for dimension-deficient hulls.
struct FacetSystem {
    std::vector<Facet> ineqs;
    std::vector<Facet> eqs;
};

struct Simplex {
    std::vector<int> verts;  // indices into a point configuration
};

struct Triangulation {
    std::vector<QVec> points;
    std::vector<Simplex> simplices;
};

enum class PointConfig { kVertices, kAllLatticePoints };

QVec to_qvec(const ZVec& v);
ZVec to_zvec(const QVec& v);  // throws if not integral

// Convex hull of the given points. Everything derived (dimension, facets,
// vertex list, lattice basis of the direction space) is cached eagerly;
// instances are immutable afterwards.
class Polytope {
public:
    explicit Polytope(std::vector<QVec> pts);

    int ambient_dim() const { return amb_; }
    int dim() const { return dim_; }
    const std::vector<QVec>& gens() const { return gens_; }        // deduped, lex sorted
    const std::vector<QVec>& vertices() const { return verts_; }   // lex sorted
    const FacetSystem& facets() const { return facets_; }
    bool lattice_vertices() const { return lattice_; }

    const QVec& base() const { return base_; }       // reference vertex
    const ZMat& lattice_basis() const { return lat_; }  // basis of lin(P-base) cap Z^amb

    // coordinates of x - base in the lattice basis (integral on lattice
    // points of lattice polytopes); throws if x outside aff(P)
    QVec affine_coords(const QVec& x) const;

    bool contains(const QVec& x) const;
    bool contains_relint(const QVec& x) const;

private:
    int amb_ = 0, dim_ = 0;
    bool lattice_ = false;
    std::vector<QVec> gens_, verts_;
    QVec base_;
    ZMat lat_;
    FacetSystem facets_;
};

// Integer points of the dilation n*P, lex sorted. n = 0 gives the origin.
std::vector<ZVec> lattice_points(const Polytope& p, long long n);

// Integer points of the relative interior of n*P, lex sorted.
std::vector<ZVec> interior_lattice_points(const Polytope& p, long long n);

// Placing (incremental, lex insertion order) triangulation.
Triangulation triangulate(const Polytope& p, PointConfig config);

// Every triangulation of conv(points) on the given points, duplicate-free,
// deterministic order. Guard: at most 12 points.
std::vector<Triangulation> all_triangulations(const std::vector<QVec>& points);

// Relative (lattice-normalized w.r.t. aff(P) cap Z^amb) volume; 1 for a point.
Rat volume(const Polytope& p);

// Exact integral of x^b over P (over aff(P) with lattice normalization when
// P is not full-dimensional).
Rat integrate_monomial(const Polytope& p, const ZVec& b);

}  // namespace ehrlift
