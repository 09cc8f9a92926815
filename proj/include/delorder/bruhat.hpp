#pragma once

#include "delorder/coxeter_system.hpp"

namespace delorder {

/// Bruhat order: u <= v iff some reduced word of u is a subword of one (and
/// then every) fixed reduced word of v. Decided without enumerating reduced
/// words via the lifting property, scanning a reduced word of v from the
/// right and following descents of the running element.
bool bruhat_leq(const CoxeterSystem& sys, const Element& u, const Element& v);

enum class BruhatRelation { Less, Greater, Equal, Incomparable };

BruhatRelation bruhat_compare(const CoxeterSystem& sys, const Element& u, const Element& v);

const char* to_string(BruhatRelation r);

}  // namespace delorder
