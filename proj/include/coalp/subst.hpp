#pragma once

#include <optional>
#include <set>
#include <vector>

#include "coalp/term.hpp"

namespace coalp {

/// An ordered list of variable bindings. Invariants: no variable is bound
/// twice, and no binding maps a variable to itself (identity bindings are
/// normalised away), so substitution equality is structural equality.
class Substitution {
public:
    using Binding = std::pair<Var, TermPtr>;

    Substitution() = default;

    bool empty() const { return bindings_.empty(); }
    size_t size() const { return bindings_.size(); }

    const std::vector<Binding>& bindings() const { return bindings_; }

    std::optional<TermPtr> lookup(const Var& v) const;
    bool bound(const Var& v) const { return lookup(v).has_value(); }

    /// Appends a binding; drops it silently if it is the identity.
    /// Precondition: v is not already bound.
    void bind(const Var& v, const TermPtr& t);

    friend bool operator==(const Substitution& a, const Substitution& b);

private:
    std::vector<Binding> bindings_;
};

/// Single-pass homomorphic application: variables introduced by the
/// right-hand sides are not rewritten again.
TermPtr applySubst(const TermPtr& t, const Substitution& s);
Atom applySubst(const Atom& a, const Substitution& s);

/// Composition: apply(t, compose(s1, s2)) == apply(apply(t, s1), s2).
Substitution compose(const Substitution& s1, const Substitution& s2);

Substitution restrictTo(const Substitution& s, const std::set<Var>& vars);

/// Flattens a triangular binding chain into one composed substitution.
Substitution flattenChain(const std::vector<Substitution>& chain);

}  // namespace coalp
