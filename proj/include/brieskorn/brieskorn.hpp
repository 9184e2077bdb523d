#pragma once

// Mixed Pham-Brieskorn singularities: symbolic classification and numeric checks.

#include "brieskorn/classifier.hpp"
#include "brieskorn/determinacy.hpp"
#include "brieskorn/exponent_data.hpp"
#include "brieskorn/mixed_polynomial.hpp"
#include "brieskorn/numeric/checks.hpp"
#include "brieskorn/numeric/contact.hpp"
#include "brieskorn/numeric/fit.hpp"
#include "brieskorn/numeric/geodesic.hpp"
#include "brieskorn/numeric/normal_embedding.hpp"
#include "brieskorn/numeric/point_cloud.hpp"
#include "brieskorn/numeric/surface_distance.hpp"
#include "brieskorn/numeric/tangent_cone.hpp"
#include "brieskorn/rational.hpp"
#include "brieskorn/report.hpp"
#include "brieskorn/surface_geometry.hpp"
#include "brieskorn/verdict.hpp"
