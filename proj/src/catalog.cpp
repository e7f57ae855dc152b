#include "ksq/catalog.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ksq {

namespace {

std::vector<std::string> numbered_labels(int n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (int i = 0; i < n; ++i) labels.push_back("A" + std::to_string(i + 1));
    return labels;
}

ComplexVector real_vector(std::initializer_list<double> entries) {
    ComplexVector v(static_cast<int>(entries.size()));
    int i = 0;
    for (double e : entries) v[i++] = std::complex<double>(e, 0.0);
    return v;
}

std::vector<std::pair<Assignment, Scalar>> rational_support(
    std::initializer_list<std::pair<const char*, Rational>> items) {
    std::vector<std::pair<Assignment, Scalar>> support;
    for (const auto& [bits, w] : items)
        support.emplace_back(Assignment::from_string(bits), Scalar(w));
    return support;
}

// Five unit vectors in R^3 whose only orthogonal pairs are the cyclically
// adjacent ones, all making equal angle with the z axis: the pentagram
// realization behind the 5-cycle scenario. cos^2(theta) = 1/sqrt(5).
std::vector<ComplexVector> pentagram_vectors() {
    const double c = std::cos(std::numbers::pi / 5);
    const double cos2 = c / (1 + c);
    const double ct = std::sqrt(cos2);
    const double st = std::sqrt(1 - cos2);
    std::vector<ComplexVector> vectors;
    for (int j = 0; j < 5; ++j) {
        const double phi = 4 * std::numbers::pi * j / 5;
        vectors.push_back(
            real_vector({st * std::cos(phi), st * std::sin(phi), ct}));
    }
    return vectors;
}

CatalogEntry make_kcbs() {
    CatalogEntry entry;
    entry.scenario = Scenario(
        "kcbs", numbered_labels(5),
        {{{0, 1}, false}, {{0, 4}, false}, {{1, 2}, false}, {{2, 3}, false},
         {{3, 4}, false}});
    entry.vectors = pentagram_vectors();
    entry.states.push_back({"maxmixed", QuantumState::maximally_mixed(3)});
    entry.states.push_back(
        {"symmetric", QuantumState::pure(real_vector({0, 0, 1}))});

    // Uniform six-point JPD matching p_i = 1/3 on every event.
    entry.fixtures.push_back(
        {"maxmixed-jpd",
         QuasiDistribution(entry.scenario,
                           rational_support({{"10100", Rational(1, 6)},
                                             {"10010", Rational(1, 6)},
                                             {"01010", Rational(1, 6)},
                                             {"01001", Rational(1, 6)},
                                             {"00101", Rational(1, 6)},
                                             {"00000", Rational(1, 6)}}),
                           NumericMode::Rational)});
    // Signed distribution matching p_i = 1/sqrt(5): five weight-2 supports at
    // 1/(2 sqrt 5) and a negative weight 1 - 5/(2 sqrt 5) on all-zeros.
    const double w = 1.0 / (2.0 * std::sqrt(5.0));
    std::vector<std::pair<Assignment, Scalar>> signed_support;
    for (const char* bits : {"10100", "10010", "01010", "01001", "00101"})
        signed_support.emplace_back(Assignment::from_string(bits), Scalar(w));
    signed_support.emplace_back(Assignment::from_string("00000"),
                                Scalar(1.0 - 5.0 * w));
    entry.fixtures.push_back(
        {"symmetric-jqd", QuasiDistribution(entry.scenario,
                                            std::move(signed_support),
                                            NumericMode::Float)});
    return entry;
}

CatalogEntry make_specker() {
    CatalogEntry entry;
    entry.scenario = Scenario("specker", {"A", "B", "C"},
                              {{{0, 1}, true}, {{0, 2}, true}, {{1, 2}, true}});
    // Anticorrelated halves on every pair; +-1/4 on the joint assignments.
    entry.fixtures.push_back(
        {"anticorrelated-jqd",
         QuasiDistribution(entry.scenario,
                           rational_support({{"000", Rational(-1, 4)},
                                             {"001", Rational(1, 4)},
                                             {"010", Rational(1, 4)},
                                             {"011", Rational(1, 4)},
                                             {"100", Rational(1, 4)},
                                             {"101", Rational(1, 4)},
                                             {"110", Rational(1, 4)},
                                             {"111", Rational(-1, 4)}}),
                           NumericMode::Rational)});
    entry.default_probabilities = EventProbabilities::from_rationals(
        {Rational(1, 2), Rational(1, 2), Rational(1, 2)});
    return entry;
}

// The 18-vector, d=4 set composed of nine complete orthogonal bases with
// every vector shared by exactly two of them. Context list frozen from a
// brute-force enumeration of all maximal mutually orthogonal subsets: the
// 9 bases plus 6 triples and 9 pairs that no basis contains.
CatalogEntry make_cabello18() {
    CatalogEntry entry;
    entry.vectors = {
        real_vector({0, 0, 0, 1}),    // 0
        real_vector({0, 0, 1, 0}),    // 1
        real_vector({1, 1, 0, 0}),    // 2
        real_vector({1, -1, 0, 0}),   // 3
        real_vector({0, 1, 0, 0}),    // 4
        real_vector({1, 0, 1, 0}),    // 5
        real_vector({1, 0, -1, 0}),   // 6
        real_vector({1, -1, 1, -1}),  // 7
        real_vector({1, -1, -1, 1}),  // 8
        real_vector({0, 0, 1, 1}),    // 9
        real_vector({1, 1, 1, 1}),    // 10
        real_vector({0, 1, 0, -1}),   // 11
        real_vector({1, 0, 0, 1}),    // 12
        real_vector({1, 0, 0, -1}),   // 13
        real_vector({0, 1, -1, 0}),   // 14
        real_vector({1, 1, -1, 1}),   // 15
        real_vector({1, 1, 1, -1}),   // 16
        real_vector({-1, 1, 1, 1}),   // 17
    };
    entry.scenario = Scenario(
        "cabello18", numbered_labels(18),
        {{{0, 1, 2, 3}, true},     {{0, 1, 4}, false},
         {{0, 4, 5, 6}, true},     {{0, 14}, false},
         {{1, 4, 12, 13}, true},   {{1, 11}, false},
         {{2, 3, 9}, false},       {{2, 7, 8, 9}, true},
         {{2, 17}, false},         {{3, 9, 15, 16}, true},
         {{3, 10}, false},         {{4, 9}, false},
         {{5, 6, 11}, false},      {{5, 8}, false},
         {{5, 11, 15, 17}, true},  {{6, 7, 10, 11}, true},
         {{6, 16}, false},         {{7, 8, 10}, false},
         {{7, 12}, false},         {{8, 10, 13, 14}, true},
         {{12, 13, 14}, false},    {{12, 14, 16, 17}, true},
         {{13, 15}, false},        {{15, 16, 17}, false}});
    entry.states.push_back({"maxmixed", QuantumState::maximally_mixed(4)});
    return entry;
}

}  // namespace

const CatalogFixture* CatalogEntry::find_fixture(std::string_view name) const {
    for (const auto& f : fixtures)
        if (f.name == name) return &f;
    return nullptr;
}

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = [] {
        std::vector<CatalogEntry> out;
        out.push_back(make_kcbs());
        out.push_back(make_specker());
        out.push_back(make_cabello18());
        return out;
    }();
    return entries;
}

const CatalogEntry* find_catalog_entry(std::string_view name) {
    for (const auto& e : catalog())
        if (e.scenario.name() == name) return &e;
    return nullptr;
}

EventProbabilities maximally_mixed_probabilities(int n_events, int dimension) {
    if (dimension < 1) throw std::invalid_argument("dimension must be positive");
    return EventProbabilities::from_rationals(
        std::vector<Rational>(n_events, Rational(1, dimension)));
}

EventProbabilities reference_probabilities(const CatalogEntry& entry,
                                           std::string_view state_name) {
    if (state_name == "maxmixed" && !entry.vectors.empty())
        return maximally_mixed_probabilities(entry.scenario.size(),
                                             entry.dimension());
    for (const auto& s : entry.states) {
        if (s.name == state_name)
            return born_probabilities(s.state,
                                      projectors_from_vectors(entry.vectors));
    }
    throw std::invalid_argument("unknown reference state '" +
                                std::string(state_name) + "' for scenario " +
                                entry.scenario.name());
}

}  // namespace ksq
