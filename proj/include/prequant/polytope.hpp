#pragma once

#include "prequant/rational.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace prequant {

struct Facet {
    IntVector normal;  // primitive conormal v_j
    Rational offset;   // a_j > 0
    bool operator==(const Facet&) const = default;
};

// { x : <x, v_j> + a_j >= 0 for all j }
class DelzantPolytope {
public:
    DelzantPolytope(std::size_t d, std::vector<Facet> facets);

    std::size_t dim() const { return d_; }
    std::size_t facet_count() const { return facets_.size(); }
    const std::vector<Facet>& facets() const { return facets_; }
    RatVector offsets() const;

    bool operator==(const DelzantPolytope&) const = default;

private:
    std::size_t d_;
    std::vector<Facet> facets_;
};

// Text format: "dim <d>" then "facet v_1 ... v_d ; a" per facet, '#' starts a comment.
DelzantPolytope parse_polytope(std::string_view text);
DelzantPolytope load_polytope(const std::string& path);
std::string serialize(const DelzantPolytope& polytope);

struct Vertex {
    RatVector point;
    std::vector<std::size_t> active;  // facets through the vertex
};

struct ValidationReport {
    bool compact = false;
    bool smooth = false;
    std::vector<Vertex> vertices;
};

ValidationReport validate(const DelzantPolytope& polytope);

// Recession cone {x : <x, v_j> >= 0} is trivial.
bool recession_cone_trivial(const DelzantPolytope& polytope);
// Independent route: no nonzero y >= 0 lies in ker(iota^T) = image of beta^T.
bool dual_compactness(const DelzantPolytope& polytope);

}  // namespace prequant
