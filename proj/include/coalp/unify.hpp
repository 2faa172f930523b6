#pragma once

#include <optional>

#include "coalp/subst.hpp"
#include "coalp/term.hpp"

namespace coalp {

/// Most general unifier with occurs check. Returns an idempotent
/// substitution, or nullopt when the atoms do not unify. Binding order is
/// deterministic (leftmost-innermost traversal).
std::optional<Substitution> unify(const Atom& a, const Atom& b);
std::optional<Substitution> unifyTerms(const TermPtr& a, const TermPtr& b);

/// One-sided matching: binds only variables of `head` so that
/// applySubst(head, result) equals `goal` exactly. Variables of `goal`
/// are treated as constants.
std::optional<Substitution> termMatch(const Atom& head, const Atom& goal);
std::optional<Substitution> termMatchTerms(const TermPtr& head, const TermPtr& goal);

}  // namespace coalp
