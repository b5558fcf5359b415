#pragma once

#include <vector>

#include "starbundle/groups.hpp"
#include "starbundle/homogeneous_bundle.hpp"
#include "starbundle/induced_sections.hpp"
#include "starbundle/representations.hpp"

namespace starbundle {

/// Standard 2-dimensional SO(2) representation: the rotation block of
/// the domain element. Valid for SO(2) itself and for its block-diagonal
/// realizations inside SO(3) and SE(2); carries the analytic
/// differential (the corner block of the algebra element).
Representation make_so2_standard_rep(DescriptorPtr domain);

/// Trivial representation on R^m.
Representation make_trivial_rep(DescriptorPtr domain, int fiber_dim);

/// One-dimensional identity character h -> (1).
Representation make_identity_character(DescriptorPtr domain);

/// The domain's own matrices as a representation (restriction of the
/// ambient standard representation to the subgroup).
Representation make_inclusion_rep(DescriptorPtr domain);

/// A catalog homogeneous space together with its default representation.
struct CatalogEntry {
  SpacePtr space;
  Representation rep;
};

/// Shipping catalog:
///   circle    — G = SO(2), H = {e}, sigma trivial on R^2
///   sphere    — G = SO(3), H = SO(2) about z, sigma = SO(2) standard
///   euclidean — G = SE(2), H = SO(2), sigma = SO(2) standard
const std::vector<std::string>& catalog_names();
const CatalogEntry& catalog_entry(const std::string& name);

/// Alternate representations addressed by id ("so2-standard",
/// "trivial-1", "trivial-2", ..., "identity-character",
/// "standard-inclusion"); throws UsageError for unknown ids or ids
/// unavailable on the entry's subgroup.
Representation catalog_representation(const CatalogEntry& entry,
                                      const std::string& rep_id);

/// Named section generators for the entry's default representation:
/// "zero" and "pullback-frame" everywhere, "sphere-height-times-frame"
/// on the sphere. All carry analytic lifts. Throws UsageError for
/// unknown ids.
SectionGenerator catalog_section_generator(const CatalogEntry& entry,
                                           const std::string& id);
std::vector<std::string> catalog_generator_ids(const CatalogEntry& entry);

}  // namespace starbundle
