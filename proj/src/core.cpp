#include "surcsp/core.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace surcsp {

Signature::Signature(std::vector<RelationSymbol> relations) : relations_(std::move(relations)) {
    if (relations_.empty()) throw InvalidArgument("signature must declare at least one relation");
    std::set<std::string> seen;
    for (const auto& rel : relations_) {
        if (rel.name.empty()) throw InvalidArgument("signature: relation name must be nonempty");
        if (rel.arity < 1)
            throw InvalidArgument("signature: relation '" + rel.name + "' has arity < 1");
        if (!seen.insert(rel.name).second)
            throw InvalidArgument("signature: duplicate relation name '" + rel.name + "'");
    }
}

int Signature::max_arity() const {
    int k = 0;
    for (const auto& rel : relations_) k = std::max(k, rel.arity);
    return k;
}

int Signature::index_of(const std::string& name) const {
    for (size_t i = 0; i < relations_.size(); ++i)
        if (relations_[i].name == name) return static_cast<int>(i);
    return -1;
}

Structure::Structure(Signature signature, int size,
                     std::vector<std::vector<std::vector<int>>> tuples)
    : signature_(std::move(signature)), size_(size), tuples_(std::move(tuples)) {
    if (size_ < 0) throw InvalidArgument("structure size must be nonnegative");
    if (tuples_.size() != static_cast<size_t>(signature_.relation_count()))
        throw InvalidArgument("structure must provide one tuple set per signature relation");
    for (int r = 0; r < signature_.relation_count(); ++r) {
        const auto& sym = signature_.relation(r);
        auto& list = tuples_[static_cast<size_t>(r)];
        for (const auto& tuple : list) {
            if (tuple.size() != static_cast<size_t>(sym.arity))
                throw InvalidArgument("relation '" + sym.name + "': tuple arity " +
                                      std::to_string(tuple.size()) + " != declared " +
                                      std::to_string(sym.arity));
            for (int v : tuple)
                if (v < 0 || v >= size_)
                    throw InvalidArgument("relation '" + sym.name + "': tuple entry " +
                                          std::to_string(v) + " outside [0, " +
                                          std::to_string(size_) + ")");
        }
        std::sort(list.begin(), list.end());
        if (std::adjacent_find(list.begin(), list.end()) != list.end())
            throw InvalidArgument("relation '" + sym.name + "': duplicate tuple");
    }
}

long long Structure::total_tuple_count() const {
    long long total = 0;
    for (const auto& list : tuples_) total += static_cast<long long>(list.size());
    return total;
}

bool Structure::contains(int relation, const std::vector<int>& tuple) const {
    const auto& list = tuples_.at(static_cast<size_t>(relation));
    return std::binary_search(list.begin(), list.end(), tuple);
}

namespace {

void check_assignment(const Structure& instance, const Structure& templ, const Assignment& h) {
    if (h.size() != static_cast<size_t>(instance.size()))
        throw InvalidArgument("assignment length " + std::to_string(h.size()) +
                              " != instance size " + std::to_string(instance.size()));
    for (int v : h)
        if (v < 0 || v >= templ.size())
            throw InvalidArgument("assignment value " + std::to_string(v) + " outside [0, " +
                                  std::to_string(templ.size()) + ")");
}

}  // namespace

EvalResult evaluate(const Structure& instance, const Structure& templ, const Assignment& h) {
    if (instance.signature() != templ.signature())
        throw SignatureMismatch("evaluate: instance and template signatures differ");
    check_assignment(instance, templ, h);

    EvalResult result;
    std::vector<int> image;
    for (int r = 0; r < instance.signature().relation_count(); ++r) {
        const auto& list = instance.tuples(r);
        long long satisfied = 0;
        for (const auto& tuple : list) {
            image.assign(tuple.size(), 0);
            for (size_t j = 0; j < tuple.size(); ++j)
                image[j] = h[static_cast<size_t>(tuple[j])];
            if (templ.contains(r, image)) ++satisfied;
        }
        result.per_relation.push_back({instance.signature().relation(r).name, satisfied,
                                       static_cast<long long>(list.size())});
        result.satisfied += satisfied;
    }
    return result;
}

bool is_surjective(const Assignment& h, int template_size) {
    if (template_size < 1) throw InvalidArgument("is_surjective: template size must be positive");
    std::vector<bool> hit(static_cast<size_t>(template_size), false);
    for (int v : h) {
        if (v < 0) throw InvalidArgument("is_surjective: negative value in assignment");
        if (v < template_size) hit[static_cast<size_t>(v)] = true;
    }
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

long long degree(const Structure& instance, int element) {
    if (element < 0 || element >= instance.size())
        throw InvalidArgument("degree: element " + std::to_string(element) + " outside [0, " +
                              std::to_string(instance.size()) + ")");
    long long count = 0;
    for (int r = 0; r < instance.signature().relation_count(); ++r)
        for (const auto& tuple : instance.tuples(r))
            for (int v : tuple)
                if (v == element) ++count;
    return count;
}

std::vector<long long> degrees(const Structure& instance) {
    std::vector<long long> out(static_cast<size_t>(instance.size()), 0);
    for (int r = 0; r < instance.signature().relation_count(); ++r)
        for (const auto& tuple : instance.tuples(r))
            for (int v : tuple) ++out[static_cast<size_t>(v)];
    return out;
}

void validate(const Structure& instance, const Structure& templ, bool surjective) {
    if (instance.signature() != templ.signature())
        throw SignatureMismatch("instance and template signatures differ");
    if (surjective && instance.size() < templ.size())
        throw NoSurjection("no surjective assignment: |A| = " + std::to_string(instance.size()) +
                           " < |B| = " + std::to_string(templ.size()));
}

}  // namespace surcsp
