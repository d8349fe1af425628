#include "oddkh/corpus.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <string>

#include "oddkh/error.hpp"

namespace oddkh {

Diagram braid_closure(int strands, const std::vector<int>& word, const std::string& name) {
  if (strands < 1) throw Error(ErrorKind::InvalidArgument, "braid needs a strand");
  int next = 0;
  std::vector<int> bottom(strands);
  for (int& a : bottom) a = next++;
  std::vector<int> cur = bottom;
  std::vector<Quad> raw;
  std::vector<char> touched(strands, 0);
  for (int letter : word) {
    const int i = std::abs(letter);
    if (letter == 0 || i >= strands) {
      throw Error(ErrorKind::InvalidArgument, "braid letter out of range");
    }
    const int x = cur[i - 1];
    const int y = cur[i];
    const int new_left = next++;
    const int new_right = next++;
    if (letter > 0) {
      raw.push_back({y, new_right, new_left, x});
    } else {
      raw.push_back({x, y, new_right, new_left});
    }
    cur[i - 1] = new_left;
    cur[i] = new_right;
    touched[i - 1] = touched[i] = 1;
  }
  std::vector<int> parent(next);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (int s = 0; s < strands; ++s) parent[find(cur[s])] = find(bottom[s]);
  // strands are joined into components only through crossings; an untouched
  // position closes up into a crossingless loop
  int loops = 0;
  for (int s = 0; s < strands; ++s) loops += !touched[s];
  std::map<int, int> label;
  std::vector<Quad> quads;
  for (const Quad& q : raw) {
    Quad out;
    for (int k = 0; k < 4; ++k) {
      const int root = find(q[k]);
      auto [it, inserted] = label.emplace(root, static_cast<int>(label.size()) + 1);
      out[k] = it->second;
    }
    quads.push_back(out);
  }
  return make_diagram(std::move(quads), loops, 0, name);
}

std::vector<CorpusEntry> standard_corpus() {
  std::vector<CorpusEntry> c;
  auto add = [&](std::string knot, Diagram d, std::int64_t det) {
    c.push_back({std::move(knot), std::move(d), det});
  };
  add("0_1", parse_pd("unknot: O[1]"), 1);
  add("0_1", parse_pd("unknot-kink+: X[1,1,2,2]"), 1);
  add("0_1", parse_pd("unknot-kink-: X[2,1,1,2]"), 1);
  add("0_1", braid_closure(3, {1, -2}, "unknot-b3"), 1);
  add("0_1", braid_closure(4, {1, 2, 3}, "unknot-b4"), 1);
  add("0_1", braid_closure(2, {1, 1, -1}, "unknot-r2"), 1);

  const Diagram left = parse_pd("3_1: X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]");
  add("3_1l", left, 3);
  add("3_1r", mirror(left), 3);
  add("3_1r", braid_closure(2, {1, 1, 1}, "trefoil-b2"), 3);
  add("3_1r", braid_closure(3, {1, 1, 1, 2}, "trefoil-b3+"), 3);
  add("3_1r", braid_closure(3, {1, 1, 1, -2}, "trefoil-b3-"), 3);
  add("3_1r", braid_closure(3, {1, 1, 1, 2, 1, -1}, "trefoil-r2"), 3);

  add("4_1", parse_pd("4_1: X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]"), 5);
  add("4_1", braid_closure(3, {1, -2, 1, -2}, "4_1-b3"), 5);
  add("5_1", parse_pd("5_1: X[1,6,2,7] X[3,8,4,9] X[5,10,6,1] X[7,2,8,3] X[9,4,10,5]"), 5);
  add("5_2", parse_pd("5_2: X[1,4,2,5] X[3,8,4,9] X[5,10,6,1] X[9,6,10,7] X[7,2,8,3]"), 7);
  add("6_1", parse_pd("6_1: X[1,4,2,5] X[7,10,8,11] X[3,9,4,8] X[9,3,10,2] X[5,12,6,1] "
                      "X[11,6,12,7]"),
      9);
  add("8_19", braid_closure(3, {1, 2, 1, 2, 1, 2, 1, 2}, "8_19"), 3);
  add("hopf", braid_closure(2, {1, 1}, "hopf"), 2);
  add("unlink2", parse_pd("unlink2: O[2]"), 0);
  add("3_1r+0_1", braid_closure(3, {1, 1, 1}, "trefoil+loop"), 0);
  return c;
}

std::vector<CorpusEntry> alternating_set() {
  static const std::vector<std::string> names{"unknot", "3_1", "4_1", "5_1", "5_2", "6_1"};
  std::vector<CorpusEntry> out;
  for (auto& e : standard_corpus()) {
    if (std::find(names.begin(), names.end(), e.diagram.name) != names.end()) out.push_back(e);
  }
  return out;
}

std::vector<Diagram> random_diagrams(int count, int max_crossings, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Diagram> out;
  out.reserve(count);
  for (int t = 0; t < count; ++t) {
    const int strands = std::uniform_int_distribution<int>(2, 4)(rng);
    const int length = std::uniform_int_distribution<int>(1, max_crossings)(rng);
    std::vector<int> word;
    for (int k = 0; k < length; ++k) {
      const int i = std::uniform_int_distribution<int>(1, strands - 1)(rng);
      word.push_back(std::bernoulli_distribution(0.5)(rng) ? i : -i);
    }
    std::string name = "random-" + std::to_string(t) + ":b" + std::to_string(strands);
    for (int w : word) name += (w > 0 ? "+" : "") + std::to_string(w);
    // the name must not contain ':' after the label position
    for (char& ch : name) {
      if (ch == ':') ch = '/';
    }
    out.push_back(braid_closure(strands, word, name));
  }
  return out;
}

}  // namespace oddkh
