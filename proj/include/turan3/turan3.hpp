#ifndef TURAN3_TURAN3_HPP
#define TURAN3_TURAN3_HPP

#include "blowup.hpp"
#include "canonical.hpp"
#include "claims.hpp"
#include "constructions.hpp"
#include "containment.hpp"
#include "density.hpp"
#include "enumerate.hpp"
#include "hypergraph.hpp"
#include "io.hpp"
#include "partition.hpp"
#include "patterns.hpp"
#include "polynomial.hpp"
#include "rational.hpp"

namespace turan3 {

inline constexpr const char* version = "0.1.0";

} // namespace turan3

#endif // TURAN3_TURAN3_HPP
