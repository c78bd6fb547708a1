#include "goodstein/hereditary.hpp"

#include <sstream>
#include <utility>
#include <vector>

#include "goodstein/numerals.hpp"

namespace goodstein {

HereditaryTree HereditaryTree::leaf(Natural coefficient)
{
    return HereditaryTree(std::make_shared<const Node>(Node{std::move(coefficient), {}, {}}));
}

HereditaryTree HereditaryTree::node(Natural coefficient, HereditaryTree exponent,
                                    HereditaryTree next)
{
    if (exponent.is_nil()) {
        throw malformed_sequence("a term node needs an exponent subtree");
    }
    return HereditaryTree(std::make_shared<const Node>(
        Node{std::move(coefficient), std::move(exponent), std::move(next)}));
}

std::size_t HereditaryTree::node_count() const
{
    if (is_nil()) {
        return 0;
    }
    return 1 + exponent().node_count() + next().node_count();
}

bool operator==(const HereditaryTree& a, const HereditaryTree& b)
{
    if (a.node_ == b.node_) {
        return true;
    }
    if (a.is_nil() || b.is_nil()) {
        return false;
    }
    return a.coefficient() == b.coefficient() && a.exponent() == b.exponent() &&
           a.next() == b.next();
}

HereditaryTree build_hereditary(const Natural& n, const Natural& base)
{
    const DigitSequence digits = to_digits(n, base);
    if (digits.size() <= 1) {
        return HereditaryTree::leaf(n);
    }

    // Fold terms from the least significant end so each node can point at
    // the already-built remainder of the sum.
    const std::size_t len = digits.size();
    HereditaryTree tail;
    if (!digits[len - 1].is_zero()) {
        tail = HereditaryTree::leaf(digits[len - 1]);
    }
    for (std::size_t exp = 1; exp < len; ++exp) {
        const Natural& c = digits[len - 1 - exp];
        if (c.is_zero()) {
            continue;
        }
        tail = HereditaryTree::node(c, build_hereditary(Natural(exp), base), std::move(tail));
    }
    return tail;
}

namespace {

void require_coefficient(const Natural& c, const Natural& base)
{
    if (c > base) {
        throw coefficient_out_of_range(c.to_string(), base.to_string());
    }
}

} // namespace

Natural eval_tree(const HereditaryTree& t, const Natural& base)
{
    if (base < Natural(2)) {
        throw invalid_base(base.to_string());
    }
    Natural sum;
    for (const HereditaryTree* cur = &t; !cur->is_nil(); cur = &cur->next()) {
        require_coefficient(cur->coefficient(), base);
        if (cur->is_leaf()) {
            sum += cur->coefficient();
            continue;
        }
        const Natural e = eval_tree(cur->exponent(), base);
        const auto small = e.to_u64();
        if (!small) {
            throw magnitude_cap_exceeded(UINT64_MAX, UINT64_MAX);
        }
        sum += cur->coefficient() * pow(base, *small);
    }
    return sum;
}

Natural eval_tree_capped(const HereditaryTree& t, const Natural& base, std::uint64_t max_bits)
{
    if (base < Natural(2)) {
        throw invalid_base(base.to_string());
    }
    Natural sum;
    for (const HereditaryTree* cur = &t; !cur->is_nil(); cur = &cur->next()) {
        require_coefficient(cur->coefficient(), base);
        Natural term;
        if (cur->is_leaf()) {
            term = cur->coefficient();
        } else {
            const Natural e = eval_tree_capped(cur->exponent(), base, max_bits);
            // base >= 2, so base^e has at least e+1 bits.
            const auto small = e.to_u64();
            if (!small || *small >= max_bits) {
                throw magnitude_cap_exceeded(small ? *small + 1 : UINT64_MAX, max_bits);
            }
            term = cur->coefficient() * pow(base, *small);
        }
        sum += term;
        if (sum.bit_length() > max_bits) {
            throw magnitude_cap_exceeded(sum.bit_length(), max_bits);
        }
    }
    return sum;
}

namespace {

bool is_plain_number(const std::string& s)
{
    return s.find_first_not_of("0123456789") == std::string::npos;
}

std::string render_sum(const HereditaryTree& t, const std::string& b, const char* separator)
{
    if (t.is_nil()) {
        return "0";
    }
    std::string out;
    for (const HereditaryTree* cur = &t; !cur->is_nil(); cur = &cur->next()) {
        if (!out.empty()) {
            out += separator;
        }
        const std::string coef = cur->coefficient().to_string();
        if (cur->is_leaf()) {
            out += coef;
            continue;
        }
        if (coef != "1") {
            out += coef;
            out += '.';
        }
        out += b;
        const std::string exp = render_sum(cur->exponent(), b, "+");
        if (exp == "1") {
            continue;
        }
        out += '^';
        if (is_plain_number(exp)) {
            out += exp;
        } else {
            out += '(';
            out += exp;
            out += ')';
        }
    }
    return out;
}

struct DotWriter {
    std::ostringstream edges;
    std::ostringstream nodes;
    std::size_t next_id = 0;

    std::size_t emit(const HereditaryTree& t)
    {
        const std::size_t id = next_id++;
        nodes << "  n" << id << " [label=\"" << t.coefficient() << "\"];\n";
        if (!t.exponent().is_nil()) {
            const std::size_t child = emit(t.exponent());
            edges << "  n" << id << " -> n" << child << " [label=\"exp\"];\n";
        }
        if (!t.next().is_nil()) {
            const std::size_t child = emit(t.next());
            edges << "  n" << id << " -> n" << child << " [label=\"add\"];\n";
        }
        return id;
    }
};

} // namespace

std::string render_tree_text(const HereditaryTree& t, const Natural& base)
{
    return render_sum(t, base.to_string(), " + ");
}

std::string render_tree_dot(const HereditaryTree& t, const Natural& label_base)
{
    DotWriter w;
    if (!t.is_nil()) {
        w.emit(t);
    }
    std::ostringstream out;
    out << "digraph hereditary {\n"
        << "  label=\"hereditary base " << label_base << "\";\n"
        << "  node [shape=circle];\n"
        << w.nodes.str() << w.edges.str() << "}\n";
    return out.str();
}

} // namespace goodstein
