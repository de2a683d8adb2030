#pragma once

#include "nfl/repspace.hpp"

namespace nfl {

// Composite ring morphism Z[source vars] -> Z[kept vars] realizing the
// isomorphism A/I ~ A_inf/I_inf; kept variables map to themselves.
struct EmbeddingMap {
  ContextPtr source;
  ContextPtr target;
  std::vector<Polynomial> images;  // per source variable, over target

  Polynomial apply(const Polynomial& f) const;
};

// Embed the slice into a smaller affine space:
//  (a) drop every indeterminate whose normal form differs from itself,
//      substituting the normal form (it lies in the standard subring);
//  (b) substitute away any variable carrying a +-1-coefficient generator
//      g = u y - f with f free of y;
// iterated to a fixpoint.  Exclusions and the matrix are transported along.
std::pair<Slice, EmbeddingMap> shrink_embedding(const Slice& s);

}  // namespace nfl
