#pragma once

// Golden data for the classification tests: the 56 square-criterion
// exclusions with their |det|*K^2 values, the 27 + 31 admitted lists, and
// the 14 embedding-obstructed types with their witness primes.

#include <string>
#include <utility>
#include <vector>

namespace golden {

// rank < 9 types failing the square criterion, with |det(R)| * K^2
inline const std::vector<std::pair<std::string, long long>> square_excluded_56 = {
    {"A6+A2", 21},    {"A6+2A1", 28},     {"A5+A3", 24},      {"A5+3A1", 48},
    {"A4+A3+A1", 40}, {"A4+2A2", 45},     {"A4+A2+2A1", 60},  {"2A3+A2", 48},
    {"A3+2A2+A1", 72},{"A6+A1", 28},      {"A5+2A1", 48},     {"A4+A3", 40},
    {"A4+A2+A1", 60}, {"A4+3A1", 80},     {"A3+2A2", 72},     {"A3+A2+2A1", 96},
    {"3A2+A1", 108},  {"A6", 21},         {"A4+A2", 45},      {"A4+2A1", 60},
    {"2A3", 48},      {"A3+A2+A1", 72},   {"A3+3A1", 96},     {"2A2+2A1", 108},
    {"A5", 24},       {"A4+A1", 40},      {"A3+A2", 48},      {"2A2+A1", 72},
    {"A2+3A1", 96},   {"A3+A1", 40},      {"2A2", 45},        {"A2+2A1", 60},
    {"4A1", 80},      {"A3", 24},         {"3A1", 48},        {"A2", 21},
    {"2A1", 28},      {"E6+2A1", 12},     {"D7+A1", 8},       {"D6+A2", 12},
    {"D5+A2+A1", 24}, {"D5+3A1", 32},     {"D4+A4", 20},      {"D4+A3+A1", 32},
    {"D4+A2+2A1", 48},{"E6+A1", 12},      {"D7", 8},          {"D5+A2", 24},
    {"D5+2A1", 32},   {"D4+A3", 32},      {"D4+A2+A1", 48},   {"D6", 12},
    {"D5+A1", 24},    {"D4+2A1", 48},     {"D4+A1", 32},      {"D4", 20},
};

// admitted with K not numerically trivial (rank < 9), 27 types
inline const std::vector<std::string> admitted_k_negative_27 = {
    "A8",      "A7+A1",  "A5+A2+A1", "2A4",    "2A3+2A1", "4A2",    "E8",
    "E7+A1",   "E6+A2",  "D8",       "D6+2A1", "D5+A3",   "2D4",    "A7",
    "A5+A2",   "2A3+A1", "E7",       "D6+A1",  "D4+3A1",  "A5+A1",  "3A2",
    "E6",      "A3+2A1", "D5",       "A4",     "A2+A1",   "A1",
};

// admitted with K numerically trivial (rank 9, Enriques case), 31 types
inline const std::vector<std::string> admitted_k_trivial_31 = {
    "A9",       "A8+A1",    "A7+A2",     "A7+2A1",  "A6+A2+A1", "A5+A4",
    "A5+A3+A1", "A5+2A2",   "A5+A2+2A1", "2A4+A1",  "A4+A3+2A1","3A3",
    "2A3+3A1",  "D9",       "D8+A1",     "D7+2A1",  "D6+A3",    "D6+A2+A1",
    "D6+3A1",   "D5+A4",    "D5+A3+A1",  "D5+D4",   "D4+A3+2A1","2D4+A1",
    "E8+A1",    "E7+A2",    "E7+2A1",    "E6+A3",   "E6+A2+A1", "2A3+A2+A1",
    "A3+3A2",
};

// rank-9 types obstructed against the even unimodular (1,9) lattice, with
// the expected witness prime, in the case order of the source computation
inline const std::vector<std::pair<std::string, long long>> even_obstructed_12 = {
    {"A6+A3", 7},      {"A6+3A1", 7},     {"A4+A3+A2", 5},  {"A4+2A2+A1", 3},
    {"D7+A2", 3},      {"D5+2A2", 3},     {"D5+A2+2A1", 3}, {"A5+D4", 3},
    {"D4+A4+A1", 5},   {"D4+A3+A2", 3},   {"D4+2A2+A1", 3}, {"E6+3A1", 3},
};

// rank < 9 square-criterion survivors obstructed against the odd unimodular
// (1, L) lattice
inline const std::vector<std::pair<std::string, long long>> odd_obstructed_2 = {
    {"D4+A2", 3},
    {"D4+2A2", 3},
};

inline const std::vector<std::string> unknown_realization = {"2A3+A2+A1", "A3+3A2"};

} // namespace golden
