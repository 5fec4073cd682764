#include "posetkit/fixtures.hpp"

#include <string>

namespace posetkit::fixtures {

Poset antichain(int n) {
  if (n < 1 || n > 26) throw input_error("antichain fixture supports 1..26 elements");
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
  return Poset::from_pairs(std::move(labels), {});
}

Poset vee5() {
  return Poset::from_pairs({"x", "x'", "y", "y'", "z"},
                           {{"x", "x'"}, {"x'", "z"}, {"y", "y'"}, {"y'", "z"}});
}

Poset hmgap4() {
  return Poset::from_pairs({"a", "b", "c", "d"}, {{"b", "d"}, {"c", "d"}, {"c", "a"}});
}

Poset m3() {
  return Poset::from_pairs(
      {"bot", "a", "b", "c", "top"},
      {{"bot", "a"}, {"bot", "b"}, {"bot", "c"}, {"a", "top"}, {"b", "top"}, {"c", "top"}});
}

Poset n5() {
  return Poset::from_pairs({"bot", "p", "q", "r", "top"},
                           {{"bot", "p"}, {"p", "q"}, {"q", "top"}, {"bot", "r"}, {"r", "top"}});
}

Poset chain(int n) {
  if (n < 1 || n > 64) throw input_error("chain fixture supports 1..64 elements");
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int i = 0; i < n; ++i) labels.push_back("c" + std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(labels[i], labels[i + 1]);
  return Poset::from_pairs(std::move(labels), std::move(pairs));
}

Poset boolean_algebra(int k) {
  if (k < 1 || k > 6) throw input_error("boolean fixture supports 1..6 atoms");
  const int n = 1 << k;
  std::vector<std::string> labels(n);
  for (int m = 0; m < n; ++m) {
    std::string l;
    for (int i = 0; i < k; ++i)
      if (m >> i & 1) l += static_cast<char>('a' + i);
    labels[m] = l.empty() ? "0" : l;
  }
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int m = 0; m < n; ++m)
    for (int i = 0; i < k; ++i)
      if (!(m >> i & 1)) pairs.emplace_back(labels[m], labels[m | (1 << i)]);
  return Poset::from_pairs(std::move(labels), std::move(pairs));
}

Poset lmd_witness6() {
  return Poset::from_pairs({"bot", "p", "q", "u", "v", "w"},
                           {{"bot", "p"},
                            {"bot", "q"},
                            {"p", "u"},
                            {"p", "v"},
                            {"q", "u"},
                            {"q", "v"},
                            {"u", "w"}});
}

}  // namespace posetkit::fixtures
