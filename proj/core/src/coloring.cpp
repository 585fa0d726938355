#include "hk4/coloring.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace hk4 {

std::vector<std::vector<Vertex>> load_parts_file(const std::string& path,
                                                 int n) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("partition: cannot open " + path);
  std::vector<std::vector<Vertex>> parts;
  std::vector<char> seen(n, 0);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<Vertex> part;
    Vertex v;
    while (ls >> v) {
      if (v < 0 || v >= n)
        throw std::runtime_error("partition: vertex out of range");
      if (seen[v]++)
        throw std::runtime_error("partition: vertex " + std::to_string(v) +
                                 " appears twice");
      part.push_back(v);
    }
    if (!part.empty()) parts.push_back(std::move(part));
  }
  if (parts.empty()) throw std::runtime_error("partition: no parts");
  return parts;
}

ColorClassView quantize(const WeightedCompleteGraph& g, int p) {
  if (p < 2) throw std::invalid_argument("quantize: p must be >= 2");
  if (p > 1000) throw std::invalid_argument("quantize: p capped at 1000");
  if (g.denom() % p != 0)
    throw std::invalid_argument("quantize: p must divide the denominator D");
  long long q = g.denom() / p;  // numerator width of one color class
  ColorClassView view;
  view.p = p;
  view.colors.resize(g.edge_count());
  for (size_t e = 0; e < g.edge_count(); ++e) {
    long long w = g.weight_num_at(e);
    long long l = w / q + 1;  // left-closed intervals
    if (l > p) l = p;         // top interval closed at 1
    view.colors[e] = (uint16_t)l;
  }
  return view;
}

const ReducedWeights::PairData& ReducedWeights::pair(int i, int j) const {
  if (i > j) std::swap(i, j);
  for (const auto& pd : pairs)
    if (pd.i == i && pd.j == j) return pd;
  throw std::out_of_range("ReducedWeights::pair: no such part pair");
}

ReducedWeights reduced_weights(const WeightedCompleteGraph& g,
                               const ColorClassView& view,
                               const std::vector<std::vector<Vertex>>& parts) {
  if (view.p < 2 || view.colors.size() != g.edge_count())
    throw std::invalid_argument("reduced_weights: view does not match graph");
  for (const auto& part : parts)
    if (part.empty())
      throw std::invalid_argument("reduced_weights: empty part");
  std::vector<char> seen(g.size(), 0);
  for (const auto& part : parts)
    for (Vertex v : part) {
      if (v < 0 || v >= g.size())
        throw std::invalid_argument("reduced_weights: vertex out of range");
      if (seen[v]++)
        throw std::invalid_argument("reduced_weights: parts overlap");
    }

  ReducedWeights out;
  out.p = view.p;
  out.parts = parts;
  int k = (int)parts.size();
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      ReducedWeights::PairData pd;
      pd.i = i;
      pd.j = j;
      pd.color_counts.assign(view.p, 0);
      for (Vertex a : parts[i])
        for (Vertex b : parts[j]) ++pd.color_counts[view.edge_color(g, a, b) - 1];
      long long cross = (long long)parts[i].size() * (long long)parts[j].size();
      long long acc_low = 0, acc_up = 0;
      for (int l = 1; l <= view.p; ++l) {
        acc_low += (long long)(l - 1) * pd.color_counts[l - 1];
        acc_up += (long long)l * pd.color_counts[l - 1];
      }
      pd.w_r = Rat(acc_low, (long long)view.p * cross);
      pd.w_r_upper = Rat(acc_up, (long long)view.p * cross);
      out.pairs.push_back(std::move(pd));
    }
  }
  return out;
}

ReducedDegreeReport reduced_degree_report(
    const WeightedCompleteGraph& g, const ColorClassView& view,
    const std::vector<std::vector<Vertex>>& parts, Rat c, Rat mu,
    const std::vector<Rat>& d_vec, Rat eps) {
  if ((int)d_vec.size() != view.p)
    throw std::invalid_argument("reduced_degree_report: d vector arity != p");
  ReducedWeights rw = reduced_weights(g, view, parts);
  int k = (int)parts.size();

  ReducedDegreeReport rep;
  rep.hypothesis_verified = false;
  for (int i = 0; i < k; ++i) {
    Rat deg(0, 1);
    for (int j = 0; j < k; ++j) {
      if (j == i) continue;
      deg = deg + rw.pair(i, j).w_r;
    }
    if (rep.argmin_part < 0 || deg < rep.min_reduced_degree) {
      rep.min_reduced_degree = deg;
      rep.argmin_part = i;
    }
  }
  Rat sum_d(0, 1);
  for (const Rat& d : d_vec) sum_d = sum_d + d;
  rep.lemma_bound = (c + mu - sum_d - Rat(2 * view.p, 1) * eps -
                     Rat(1, view.p)) *
                    Rat::of(k);
  rep.meets_bound = rep.min_reduced_degree >= rep.lemma_bound;
  return rep;
}

}  // namespace hk4
