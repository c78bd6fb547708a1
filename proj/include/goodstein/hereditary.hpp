#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "goodstein/natural.hpp"

namespace goodstein {

/// Binary tree of a number written in hereditary base notation.
///
/// A node carries a coefficient. Its `exponent` child (vertical branch) is
/// the power the base is raised to; its `next` child (horizontal branch) is
/// the remaining sum. A node with neither child is a constant leaf. The
/// tree holds no base: the same tree denotes c*b^e + ... for whichever base
/// it is evaluated under.
///
/// Nodes are immutable and shared, so copies are cheap.
class HereditaryTree {
public:
    /// The empty tree (nil), which evaluates to zero.
    HereditaryTree() = default;

    static HereditaryTree leaf(Natural coefficient);
    static HereditaryTree node(Natural coefficient, HereditaryTree exponent,
                               HereditaryTree next = {});

    bool is_nil() const noexcept { return node_ == nullptr; }
    bool is_leaf() const noexcept;

    /// Preconditions: !is_nil().
    const Natural& coefficient() const;
    const HereditaryTree& exponent() const;
    const HereditaryTree& next() const;

    std::size_t node_count() const;

    /// Structural equality; no base is involved.
    friend bool operator==(const HereditaryTree& a, const HereditaryTree& b);

private:
    struct Node;

    explicit HereditaryTree(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

    std::shared_ptr<const Node> node_;
};

struct HereditaryTree::Node {
    Natural coefficient;
    HereditaryTree exponent;
    HereditaryTree next;
};

inline bool HereditaryTree::is_leaf() const noexcept
{
    return node_ != nullptr && node_->exponent.is_nil();
}
inline const Natural& HereditaryTree::coefficient() const { return node_->coefficient; }
inline const HereditaryTree& HereditaryTree::exponent() const { return node_->exponent; }
inline const HereditaryTree& HereditaryTree::next() const { return node_->next; }

HereditaryTree build_hereditary(const Natural& n, const Natural& base);

Natural eval_tree(const HereditaryTree& t, const Natural& base);

/// Evaluates under `base`, throwing `magnitude_cap_exceeded` as soon as any
/// partial value is known to need more than `max_bits` bits. Powers whose
/// exponent alone exceeds the cap are never materialised.
Natural eval_tree_capped(const HereditaryTree& t, const Natural& base, std::uint64_t max_bits);

/// Linear notation, e.g. "2^(2^2) + 2^(2+1) + 1" or "2.3^(2.3^2) + 3^2 + 1".
std::string render_tree_text(const HereditaryTree& t, const Natural& base);

/// Graphviz digraph; vertical edges labelled "exp", horizontal ones "add".
std::string render_tree_dot(const HereditaryTree& t, const Natural& label_base);

} // namespace goodstein
