#include "corridor/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "corridor/bijection.hpp"
#include "corridor/closed_form.hpp"
#include "corridor/dp.hpp"
#include "corridor/enumerate.hpp"
#include "corridor/ta.hpp"
#include "corridor/transfer_matrix.hpp"

namespace corridor {

namespace {

std::string instance_str(int h, long long n, int k, int i, int j) {
  std::ostringstream os;
  os << "h=" << h << " n=" << n << " k=" << k << " i=" << i << " j=" << j;
  return os.str();
}

void record(SweepReport& rep, const Count& lhs, const Count& rhs, const std::string& inst) {
  ++rep.checked;
  if (lhs != rhs) rep.failures.push_back({inst, lhs.str(), rhs.str()});
}

// Per-(h, n) cache of endpoint vectors for every start.
std::vector<std::vector<Count>> all_start_vectors(int h, long long n) {
  std::vector<std::vector<Count>> vecs;
  vecs.reserve(static_cast<std::size_t>(h) + 1);
  for (int i = 0; i <= h; ++i) vecs.push_back(dp_count_vector(h, i, n));
  return vecs;
}

Count window_sum(const std::vector<Count>& vec, int h, long long n, int i, int k, int j) {
  Count total = 0;
  for (int l : feasible_endpoints(h, n, i, k, j)) total += vec[static_cast<std::size_t>(l)];
  return total;
}

Count vector_sum(const std::vector<Count>& vec) {
  Count total = 0;
  for (const auto& c : vec) total += c;
  return total;
}

}  // namespace

std::vector<SweepReport> check_identities(int h_max, long long n_max) {
  SweepReport sym{"window-symmetry", "", 0, {}};
  SweepReport updown{"up-down-symmetry", "", 0, {}};
  SweepReport high{"high-start-symmetry", "", 0, {}};
  SweepReport middle{"middle-start-equality", "", 0, {}};
  SweepReport unbounded{"unbounded-symmetry", "", 0, {}};
  SweepReport doubling{"grand-dyck-doubling", "", 0, {}};
  {
    std::ostringstream os;
    os << "h<=" << h_max << " n<=" << n_max;
    sym.params = updown.params = high.params = middle.params = doubling.params = os.str();
    os << " k<=n ceiling=n+k+2";
    unbounded.params = os.str();
  }

  for (int h = 0; h <= h_max; ++h) {
    for (long long n = 0; n <= n_max; ++n) {
      auto vecs = all_start_vectors(h, n);

      for (int k = -1; k <= h; ++k) {
        int cap = std::min(k + 1, h - k);
        for (int i = 0; i <= cap; ++i)
          for (int j = 0; j <= cap; ++j)
            record(sym, window_sum(vecs[i], h, n, i, k, j), window_sum(vecs[j], h, n, j, k, i),
                   instance_str(h, n, k, i, j));
      }

      for (int k = 0; k <= h; ++k)
        for (int i = 0; i <= h; ++i)
          for (int j = 0; j <= h; ++j)
            record(updown, window_sum(vecs[i], h, n, i, k, j),
                   window_sum(vecs[h - i], h, n, h - i, h - k - 1, j),
                   instance_str(h, n, k, i, j));

      for (int k = 0; k <= h; ++k) {
        int jcap = std::min(k + 1, h - k);
        for (int i = std::max(k, h - k - 1); i <= h; ++i)
          for (int j = 0; j <= jcap; ++j)
            record(high, window_sum(vecs[i], h, n, i, k, j),
                   window_sum(vecs[j], h, n, j, h - k - 1, h - i),
                   instance_str(h, n, k, i, j));
      }

      record(middle, vector_sum(vecs[h / 2]), vector_sum(vecs[(h + 1) / 2]),
             instance_str(h, n, -1, h / 2, (h + 1) / 2));

      if (h % 2 == 0 && n >= 1 && 2 * n <= n_max) {
        int mid = h / 2;
        record(doubling, window_sum(all_start_vectors(h, 2 * n)[mid], h, 2 * n, mid, mid, 0),
               2 * window_sum(all_start_vectors(h, 2 * n - 1)[mid], h, 2 * n - 1, mid, mid, 0),
               instance_str(h, 2 * n, mid, mid, 0));
      }
    }
  }

  // Ceiling placed out of reach of every swept start, so the band above
  // never interferes.
  for (long long n = 0; n <= n_max; ++n) {
    for (int k = 0; k <= n; ++k) {
      int ceiling = static_cast<int>(n) + k + 2;
      std::map<int, std::vector<Count>> cache;
      auto vec = [&](int start) -> const std::vector<Count>& {
        auto it = cache.find(start);
        if (it == cache.end())
          it = cache.emplace(start, dp_count_vector(ceiling, start, n)).first;
        return it->second;
      };
      for (int i = 0; i <= k + 1; ++i)
        for (int j = 0; j <= k + 1; ++j)
          record(unbounded, window_sum(vec(i), ceiling, n, i, k, j),
                 window_sum(vec(j), ceiling, n, j, k, i), instance_str(ceiling, n, k, i, j));
    }
  }

  return {sym, updown, high, middle, unbounded, doubling};
}

std::pair<Count, Count> window_symmetry_pair(int h, int k, int i, int j, long long n) {
  return {dp_count_window(h, i, k, j, n), dp_count_window(h, j, k, i, n)};
}

SweepReport check_engines(int h_max, long long n_max, long long oracle_n_max, int oracle_h_max) {
  SweepReport rep{"engines", "", 0, {}};
  {
    std::ostringstream os;
    os << "h<=" << h_max << " n<=" << n_max << " oracle h<=" << oracle_h_max << " n<="
       << oracle_n_max;
    rep.params = os.str();
  }

  for (int h = 0; h <= h_max; ++h) {
    for (long long n = 0; n <= n_max; ++n) {
      auto vecs = all_start_vectors(h, n);
      CountMatrix mn = step_matrix(h).pow(static_cast<unsigned long long>(n));

      for (int i = 0; i <= h; ++i) {
        for (int l = 0; l <= h; ++l) {
          const Count& dp = vecs[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)];
          std::ostringstream os;
          os << "endpoint h=" << h << " i=" << i << " l=" << l << " n=" << n;
          record(rep, dp, cf_count_endpoint(h, i, l, n), os.str() + " dp/cf");
          record(rep, dp, mn(i, l), os.str() + " dp/tm");
        }
      }

      for (int k = -1; k <= h; ++k) {
        int cap = std::min(k + 1, h - k);
        for (int i = 0; i <= cap; ++i) {
          for (int j = 0; j <= cap; ++j) {
            Count dp = window_sum(vecs[static_cast<std::size_t>(i)], h, n, i, k, j);
            Count tm = 0;
            for (int l : feasible_endpoints(h, n, i, k, j)) tm += mn(i, l);
            std::string inst = "window " + instance_str(h, n, k, i, j);
            record(rep, dp, cf_count_window(h, i, k, j, n), inst + " dp/cf");
            record(rep, dp, tm, inst + " dp/tm");
          }
        }
      }
    }
  }

  for (int h = 0; h <= oracle_h_max; ++h) {
    for (long long n = 0; n <= oracle_n_max; ++n) {
      auto vecs = all_start_vectors(h, n);
      for (int i = 0; i <= h; ++i) {
        std::vector<Count> histogram(static_cast<std::size_t>(h) + 1);
        PathStream stream(h, i, n);
        while (auto p = stream.next()) ++histogram[static_cast<std::size_t>(p->end())];
        for (int l = 0; l <= h; ++l) {
          std::ostringstream os;
          os << "oracle h=" << h << " i=" << i << " l=" << l << " n=" << n;
          record(rep, histogram[static_cast<std::size_t>(l)],
                 vecs[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)], os.str());
        }
      }
    }
  }

  return rep;
}

namespace {

void sweep_main_bijection(SweepReport& rep, int h, long long n, int k, int i, int j) {
  auto ends = feasible_endpoints(h, n, i, k, j);
  auto source = enumerate_paths(h, i, n, std::set<int>(ends.begin(), ends.end()));
  Count source_count = dp_count_window(h, i, k, j, n);
  Count target_count = dp_count_window(h, j, k, i, n);
  std::string inst = instance_str(h, n, k, i, j);

  if (Count(source.size()) != source_count) {
    rep.failures.push_back({inst + " enumeration", Count(source.size()).str(),
                            source_count.str()});
    return;
  }

  Window target{k, i};
  std::set<std::string> images;
  for (const auto& p : source) {
    ++rep.checked;
    try {
      auto [q, tag] = correspond(p, h, k, i, j);
      if (q.base != j || !q.valid_in(h) || !target.contains(q.end())) {
        rep.failures.push_back({inst + " image of " + p.str(), q.str(), "not in target set"});
        continue;
      }
      auto [back, back_tag] = correspond(q, h, k, j, i);
      if (!(back == p))
        rep.failures.push_back({inst + " inverse of " + p.str(), back.str(), p.str()});
      if (i == j && !(q == p))
        rep.failures.push_back({inst + " equal case of " + p.str(), q.str(), p.str()});
      images.insert(q.str());
    } catch (const std::exception& e) {
      rep.failures.push_back({inst + " mapping " + p.str(), e.what(), "no error"});
    }
  }
  if (Count(images.size()) != target_count)
    rep.failures.push_back(
        {inst + " image count", Count(images.size()).str(), target_count.str()});
}

template <typename MapFn>
void sweep_alt_bijection(SweepReport& rep, int h, long long n, int k, int i, int j, MapFn map) {
  auto ends = feasible_endpoints(h, n, i, k, j);
  auto source = enumerate_paths(h, i, n, std::set<int>(ends.begin(), ends.end()));
  Count target_count = dp_count_window(h, j, k, i, n);
  std::string inst = instance_str(h, n, k, i, j);

  std::set<std::string> images;
  for (const auto& p : source) {
    ++rep.checked;
    std::optional<Path> q = map(p, h, k, i, j);
    if (!q) {
      rep.failures.push_back({inst + " image of " + p.str(), "not applicable", "a valid image"});
      continue;
    }
    images.insert(q->str());
  }
  if (Count(images.size()) != Count(source.size()) || Count(images.size()) != target_count)
    rep.failures.push_back(
        {inst + " image count", Count(images.size()).str(), target_count.str()});
}

}  // namespace

std::vector<SweepReport> check_bijections(int h_max, long long n_max) {
  SweepReport main_rep{"bijection-main", "", 0, {}};
  SweepReport full_rep{"bijection-full-reverse", "", 0, {}};
  SweepReport flip_rep{"bijection-flip-reverse", "", 0, {}};
  {
    std::ostringstream os;
    os << "h<=" << h_max << " n<=" << n_max;
    main_rep.params = os.str();
    full_rep.params = os.str() + " parity domain";
    flip_rep.params = os.str() + " parity domain, attractor-centered pairs";
  }

  for (int h = 0; h <= h_max; ++h) {
    for (long long n = 0; n <= n_max; ++n) {
      for (int k = -1; k <= h; ++k) {
        int cap = std::min(k + 1, h - k);
        for (int i = 0; i <= cap; ++i)
          for (int j = 0; j <= cap; ++j) sweep_main_bijection(main_rep, h, n, k, i, j);
      }

      int mid = h / 2;
      int cap = std::min(mid + 1, h - mid);
      if (applicability(h, n, AltVariant::full_reverse)) {
        if (h % 2 != 0) {
          // Claimed for every theorem-valid pair in the centered frame.
          for (int i = 0; i <= cap; ++i)
            for (int j = 0; j <= cap; ++j)
              sweep_alt_bijection(full_rep, h, n, mid, i, j, alt_full_reverse);
        } else {
          sweep_alt_bijection(full_rep, h, n, mid, mid, 0, alt_full_reverse);
          sweep_alt_bijection(full_rep, h, n, mid, 0, mid, alt_full_reverse);
        }
      }
      if (applicability(h, n, AltVariant::flip_reverse)) {
        sweep_alt_bijection(flip_rep, h, n, mid, mid, 0, alt_flip_reverse);
        sweep_alt_bijection(flip_rep, h, n, mid, 0, mid, alt_flip_reverse);
      }
    }
  }

  return {main_rep, full_rep, flip_rep};
}

std::vector<Count> sequence(int h, int i, int k, int j, long long n_max) {
  if (!counting_valid(h, 0, i, j)) throw std::domain_error("sequence: invalid frame");
  std::vector<Count> out;
  out.reserve(static_cast<std::size_t>(n_max) + 1);
  std::vector<Count> vec(static_cast<std::size_t>(h) + 1);
  vec[static_cast<std::size_t>(i)] = 1;
  for (long long n = 0; n <= n_max; ++n) {
    out.push_back(window_sum(vec, h, n, i, k, j));
    std::vector<Count> next(vec.size());
    for (int y = 0; y <= h; ++y) {
      Count c;
      if (y > 0) c += vec[static_cast<std::size_t>(y) - 1];
      if (y < h) c += vec[static_cast<std::size_t>(y) + 1];
      next[static_cast<std::size_t>(y)] = std::move(c);
    }
    vec.swap(next);
  }
  return out;
}

SweepReport compare_sequence(const std::vector<Count>& got, const ReferenceSequence& ref) {
  SweepReport rep{"sequence-" + ref.label, "", 0, {}};
  std::size_t overlap = std::min(got.size(), ref.terms.size());
  rep.params = "terms=" + std::to_string(overlap);
  for (std::size_t t = 0; t < overlap; ++t) {
    ++rep.checked;
    if (got[t] != ref.terms[t])
      rep.failures.push_back({"n=" + std::to_string(ref.offset + static_cast<long long>(t)),
                              got[t].str(), ref.terms[t].str()});
  }
  return rep;
}

std::string render_table(int h, long long n_max) {
  if (h < 0) throw std::domain_error("render_table: negative corridor height");
  if (n_max < 0) throw std::domain_error("render_table: negative n_max");
  std::string csv = "i,ell,n,count\n";
  for (int i = h; i >= 0; --i) {
    // endpoint vectors for n = 0..n_max
    std::vector<std::vector<Count>> by_n;
    by_n.reserve(static_cast<std::size_t>(n_max) + 1);
    std::vector<Count> vec(static_cast<std::size_t>(h) + 1);
    vec[static_cast<std::size_t>(i)] = 1;
    for (long long n = 0; n <= n_max; ++n) {
      by_n.push_back(vec);
      std::vector<Count> next(vec.size());
      for (int y = 0; y <= h; ++y) {
        Count c;
        if (y > 0) c += vec[static_cast<std::size_t>(y) - 1];
        if (y < h) c += vec[static_cast<std::size_t>(y) + 1];
        next[static_cast<std::size_t>(y)] = std::move(c);
      }
      vec.swap(next);
    }
    for (int l = h; l >= 0; --l)
      for (long long n = 0; n <= n_max; ++n) {
        const Count& c = by_n[static_cast<std::size_t>(n)][static_cast<std::size_t>(l)];
        if (c != 0) {
          csv += std::to_string(i) + ',' + std::to_string(l) + ',' + std::to_string(n) + ',' +
                 c.str() + '\n';
        }
      }
  }
  return csv;
}

GoldenDiff compare_golden(int h, long long n_max) {
  if (n_max > 16) throw std::domain_error("compare_golden: golden tables cover n <= 16");
  const std::string& golden = golden_table_csv(h);  // throws for h outside {4, 5}

  auto filter = [n_max](const std::string& csv) {
    std::istringstream in(csv);
    std::string line, out;
    bool header = true;
    while (std::getline(in, line)) {
      if (header) {
        out += line + '\n';
        header = false;
        continue;
      }
      auto c1 = line.find(',');
      auto c2 = line.find(',', c1 + 1);
      auto c3 = line.find(',', c2 + 1);
      long long n = std::stoll(line.substr(c2 + 1, c3 - c2 - 1));
      if (n <= n_max) out += line + '\n';
    }
    return out;
  };

  return diff_csv(render_table(h, n_max), filter(golden));
}

GoldenDiff diff_csv(const std::string& got, const std::string& want) {
  GoldenDiff diff;
  if (got == want) {
    diff.match = true;
    return diff;
  }
  std::istringstream gin(got), win(want);
  std::string gline, wline;
  int lineno = 0;
  while (true) {
    bool g = static_cast<bool>(std::getline(gin, gline));
    bool w = static_cast<bool>(std::getline(win, wline));
    ++lineno;
    if (!g && !w) break;
    if (!g || !w || gline != wline) {
      diff.first_difference = "line " + std::to_string(lineno) + ": got '" +
                              (g ? gline : "<eof>") + "' want '" + (w ? wline : "<eof>") + "'";
      break;
    }
  }
  return diff;
}

}  // namespace corridor
