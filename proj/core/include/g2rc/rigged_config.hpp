#pragma once
// Configurations (nu1, nu2), vacancy numbers, riggings, charge, enumeration.
#include <string>
#include <vector>

#include "g2rc/crystal.hpp"
#include "g2rc/paths.hpp"

namespace g2rc {

struct Str {
    int len = 0;
    int rig = 0;
    auto operator<=>(const Str&) const = default;
};

// Partitions stored weakly decreasing.
struct Configuration {
    int L = 0;
    std::vector<int> nu1, nu2;
    const std::vector<int>& nu(int a) const { return a == 1 ? nu1 : nu2; }
    auto operator<=>(const Configuration&) const = default;
};

// Strings kept in canonical order: length descending, rigging descending.
struct RiggedConfig {
    int L = 0;
    std::vector<Str> nu1, nu2;
    std::vector<Str>& nu(int a) { return a == 1 ? nu1 : nu2; }
    const std::vector<Str>& nu(int a) const { return a == 1 ? nu1 : nu2; }
    Configuration shape() const;
    void canonicalize();
    auto operator<=>(const RiggedConfig&) const = default;
};

namespace rc {

inline constexpr int kDefaultMaxL = 7;

// Effective length of a nu1 string and its type (0, 1 = type-I, 2 = type-II).
inline int eff(int len) { return (len + 2) / 3; }
inline int type_of(int len) { return len % 3 == 0 ? 0 : (len % 3 == 2 ? 1 : 2); }

int vacancy(const Configuration& c, int a, int i);
inline int vacancy(const RiggedConfig& r, int a, int i) { return vacancy(r.shape(), a, i); }

int size(const std::vector<int>& part);
Weight lambda_of(const Configuration& c);

// Largest index where vacancy numbers can still vary; beyond it they equal lambda.
int window(const Configuration& c);

bool vacancies_nonnegative(const Configuration& c);
bool is_admissible(const Configuration& c, Weight lam);
bool is_valid(const RiggedConfig& r);  // nonnegative vacancies, 0 <= rig <= p

int charge_config(const Configuration& c);
int charge(const RiggedConfig& r);

// n1, n2 solved from the weight; negative means no configuration exists.
std::pair<int, int> box_counts(Weight lam, int L);

std::vector<Configuration> enumerate_configs(Weight lam, int L, int max_l = kDefaultMaxL);
std::vector<RiggedConfig> enumerate_rc(Weight lam, int L, int max_l = kDefaultMaxL);

// Every dominant weight with nonnegative n1, n2 at length L.
std::vector<Weight> dominant_weights(int L);

std::string to_string(const RiggedConfig& r);  // compact single-line form

}  // namespace rc
}  // namespace g2rc
