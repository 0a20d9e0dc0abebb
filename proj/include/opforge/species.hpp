#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "opforge/linear.hpp"

namespace opforge {

// Operadic labels are positive integers. Generators of a free algebra are the
// letters a..z, stored above kGeneratorBase so that they sort after numbers.
using Label = int;
constexpr Label kGeneratorBase = 1 << 20;

inline Label generator(char c) { return kGeneratorBase + (c - 'a'); }
inline bool is_generator(Label l) { return l >= kGeneratorBase; }
std::string format_label(Label l);

struct RootedTree {
    Label label = 0;
    std::vector<RootedTree> children;  // canonical: sorted
};

struct PointedSet {
    Label point = 0;
    std::vector<Label> others;  // sorted; a multiset once decorated
};

// Comm basis: a (multi)set of labels.
struct LabelSet {
    std::vector<Label> items;  // sorted
};

struct Word {
    std::vector<Label> letters;
};

// Leaf, the two 2-as colors, the Dipterous grafting level, and the magmatic node.
enum class Node : std::uint8_t { Leaf, Star, Dot, Vee, Mag };

struct PlanarTree {
    Node kind = Node::Leaf;
    Label label = 0;  // leaves only
    std::vector<PlanarTree> children;
};

struct Hypertree {
    Label root = 0;
    std::vector<Label> vertices;            // sorted, distinct
    std::vector<std::vector<Label>> edges;  // each sorted, size >= 2; list sorted
};

struct Surjection {
    std::vector<int> values;
};

using Element = std::variant<RootedTree, PointedSet, LabelSet, Word, PlanarTree, Hypertree, Surjection>;
using Tensor = std::vector<Element>;
using Vec = LinComb<Element>;
using TVec = LinComb<Tensor>;

enum class BasisKind { Tree, Pointed, Set, Word, Planar, Hypertree, Surjection };
BasisKind kind_of(const Element& e);
const char* kind_name(BasisKind k);

class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

int compare(const RootedTree& a, const RootedTree& b);
int compare(const PointedSet& a, const PointedSet& b);
int compare(const LabelSet& a, const LabelSet& b);
int compare(const Word& a, const Word& b);
int compare(const PlanarTree& a, const PlanarTree& b);
int compare(const Hypertree& a, const Hypertree& b);
int compare(const Surjection& a, const Surjection& b);

#define OPFORGE_ORDER(T)                                                            \
    inline bool operator<(const T& a, const T& b) { return compare(a, b) < 0; }    \
    inline bool operator==(const T& a, const T& b) { return compare(a, b) == 0; }  \
    inline bool operator!=(const T& a, const T& b) { return compare(a, b) != 0; }
OPFORGE_ORDER(RootedTree)
OPFORGE_ORDER(PointedSet)
OPFORGE_ORDER(LabelSet)
OPFORGE_ORDER(Word)
OPFORGE_ORDER(PlanarTree)
OPFORGE_ORDER(Hypertree)
OPFORGE_ORDER(Surjection)
#undef OPFORGE_ORDER

// Canonical representative; throws ValidationError on malformed input.
Element canonicalize(const Element& e);
RootedTree canonical_tree(RootedTree t);
PlanarTree canonical_planar(PlanarTree t);
Hypertree canonical_hypertree(Hypertree h);
void validate(const Element& e);

// Number of label slots (vertices, letters, leaves, word length).
int degree(const Element& e);
int degree(const Tensor& t);

// Labels in slot order; hypertrees list their sorted vertices.
std::vector<Label> slots(const Element& e);
// Replace slot i by values[i], then canonicalize.
Element fill_slots(const Element& e, const std::vector<Label>& values);
Element relabel_map(const Element& e, const std::map<Label, Label>& m);

// Replace each slot by 1..n in slot order; returns the multilinear element and
// the decoration read off each new label (decoration[i-1] belongs to label i).
std::pair<Element, std::vector<Label>> lift(const Element& e);
bool has_distinct_labels(const Element& e);

std::string format(const Element& e);
std::string format(const Tensor& t);
// Linear combinations: terms in key order, unit coefficients omitted, "0" when empty.
std::string format(const Vec& v);
std::string format(const TVec& v);
Element parse_element(BasisKind kind, const std::string& text);
BasisKind parse_kind(const std::string& name);

Surjection standardize(const std::vector<int>& values);

}  // namespace opforge
