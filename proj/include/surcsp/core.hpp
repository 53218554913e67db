#pragma once

#include "surcsp/errors.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace surcsp {

// A total map from instance elements to template values. Index = element.
using Assignment = std::vector<int>;

// A partial map; kUnassigned marks elements still free. Used internally by
// the conditional-expectation machinery.
constexpr int kUnassigned = -1;
using PartialAssignment = std::vector<int>;

struct RelationSymbol {
    std::string name;
    int arity = 0;

    friend bool operator==(const RelationSymbol&, const RelationSymbol&) = default;
};

// Ordered list of relation symbols shared by a template and its instances.
class Signature {
public:
    Signature() = default;
    explicit Signature(std::vector<RelationSymbol> relations);

    const std::vector<RelationSymbol>& relations() const { return relations_; }
    int relation_count() const { return static_cast<int>(relations_.size()); }
    const RelationSymbol& relation(int i) const { return relations_.at(static_cast<size_t>(i)); }
    int max_arity() const;
    // Index of a named relation, or -1.
    int index_of(const std::string& name) const;

    friend bool operator==(const Signature&, const Signature&) = default;

private:
    std::vector<RelationSymbol> relations_;
};

// A finite relational structure over elements 0..size-1. Immutable after
// construction; tuple lists are validated, deduplicated-checked, and stored
// sorted so equal structures compare equal.
class Structure {
public:
    Structure() = default;
    Structure(Signature signature, int size,
              std::vector<std::vector<std::vector<int>>> tuples);

    const Signature& signature() const { return signature_; }
    int size() const { return size_; }
    const std::vector<std::vector<int>>& tuples(int relation) const {
        return tuples_.at(static_cast<size_t>(relation));
    }
    const std::vector<std::vector<std::vector<int>>>& all_tuples() const { return tuples_; }

    long long total_tuple_count() const;
    bool contains(int relation, const std::vector<int>& tuple) const;

    friend bool operator==(const Structure&, const Structure&) = default;

private:
    Signature signature_;
    int size_ = 0;
    std::vector<std::vector<std::vector<int>>> tuples_;
};

struct RelationCount {
    std::string name;
    long long satisfied = 0;
    long long total = 0;

    friend bool operator==(const RelationCount&, const RelationCount&) = default;
};

// Satisfied-constraint count plus the per-relation breakdown.
struct EvalResult {
    long long satisfied = 0;
    std::vector<RelationCount> per_relation;
};

// Number of instance tuples carried into the template relation by h.
EvalResult evaluate(const Structure& instance, const Structure& templ, const Assignment& h);

// True iff every value 0..template_size-1 appears in h.
bool is_surjective(const Assignment& h, int template_size);

// Occurrence count of an element across all tuples of all relations, with
// multiplicity: an element appearing twice in one tuple counts twice.
long long degree(const Structure& instance, int element);

// degree() for every element at once.
std::vector<long long> degrees(const Structure& instance);

// Throws SignatureMismatch if the signatures differ; in surjective mode also
// throws NoSurjection when |A| < |B|.
void validate(const Structure& instance, const Structure& templ, bool surjective);

}  // namespace surcsp
