#include "djkm/algebra.hpp"

namespace djkm {
namespace {

using ElementC = AlgebraElement<PolyC>;

std::string pair_witness(const char* what, const BasisKey& a,
                         const BasisKey& b, const ElementC& residual) {
  return std::string(what) + " [" + a.to_string() + ", " + b.to_string() +
         "] residual " + residual.to_string();
}

}  // namespace

BasisKey BasisKey::parse(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 >= text.size()) {
    throw ParseError("basis key needs the form name:index, got '" + text + "'");
  }
  std::string name = text.substr(0, colon);
  int n = 0;
  try {
    size_t used = 0;
    n = std::stoi(text.substr(colon + 1), &used);
    if (used != text.size() - colon - 1) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw ParseError("bad basis key index in '" + text + "'");
  }
  if (name == "w") return BasisKey::central(n);
  int parity = 0;
  if (name.size() == 2 && name[1] == '1') {
    parity = 1;
    name = name.substr(0, 1);
  }
  Gen g;
  if (name == "e") {
    g = Gen::E;
  } else if (name == "f") {
    g = Gen::F;
  } else if (name == "h") {
    g = Gen::H;
  } else {
    throw ParseError("unknown generator '" + text + "'");
  }
  return BasisKey::current(g, parity, n);
}

std::vector<BasisKey> basis_window(int window) {
  std::vector<BasisKey> keys;
  keys.reserve(static_cast<size_t>(6 * (2 * window + 1)));
  for (int n = -window; n <= window; ++n) {
    for (int parity : {0, 1}) {
      for (Gen g : {Gen::E, Gen::F, Gen::H}) {
        keys.push_back(BasisKey::current(g, parity, n));
      }
    }
  }
  return keys;
}

Report verify_antisymmetry(BracketContext<PolyC>& ctx, int window,
                           int workers) {
  auto keys = basis_window(window);
  ctx.prewarm_psi(-(2 * window + 2), 2 * window + 2);
  const size_t n = keys.size();
  std::vector<std::pair<uint32_t, uint32_t>> pairs;
  pairs.reserve(n * (n + 1) / 2);
  for (uint32_t i = 0; i < n; ++i) {
    for (uint32_t j = i; j < n; ++j) pairs.emplace_back(i, j);
  }
  Report report = run_chunked(
      pairs.size(), workers, [&](uint64_t begin, uint64_t end, Report& local) {
        for (uint64_t idx = begin; idx < end; ++idx) {
          auto [i, j] = pairs[idx];
          ElementC a = ElementC::single(keys[i]);
          ElementC b = ElementC::single(keys[j]);
          ElementC residual =
              bracket_closed(ctx, a, b) + bracket_closed(ctx, b, a);
          ++local.checked;
          if (!residual.is_zero()) {
            local.note_failure(
                pair_witness("antisymmetry", keys[i], keys[j], residual));
          }
        }
      });
  // Centrals annihilate everything.
  for (int j = 0; j >= -4; --j) {
    ElementC w = ElementC::single(BasisKey::central(j));
    for (const auto& key : keys) {
      ElementC a = ElementC::single(key);
      ElementC residual = bracket_closed(ctx, a, w) + bracket_closed(ctx, w, a);
      ++report.checked;
      if (!residual.is_zero()) {
        report.note_failure(
            pair_witness("central", key, BasisKey::central(j), residual));
      }
    }
  }
  return report;
}

Report verify_jacobi(BracketContext<PolyC>& ctx, int window, int workers) {
  auto keys = basis_window(window);
  ctx.prewarm_psi(-(3 * window + 6), 3 * window + 6);
  const uint32_t n = static_cast<uint32_t>(keys.size());
  std::vector<std::array<uint32_t, 3>> triples;
  triples.reserve(static_cast<size_t>(n) * (n + 1) * (n + 2) / 6);
  for (uint32_t i = 0; i < n; ++i) {
    for (uint32_t j = i; j < n; ++j) {
      for (uint32_t k = j; k < n; ++k) triples.push_back({i, j, k});
    }
  }
  return run_chunked(
      triples.size(), workers, [&](uint64_t begin, uint64_t end, Report& local) {
        for (uint64_t idx = begin; idx < end; ++idx) {
          auto [i, j, k] = triples[idx];
          ElementC a = ElementC::single(keys[i]);
          ElementC b = ElementC::single(keys[j]);
          ElementC c = ElementC::single(keys[k]);
          ElementC residual =
              bracket_closed(ctx, a, bracket_closed(ctx, b, c)) +
              bracket_closed(ctx, b, bracket_closed(ctx, c, a)) +
              bracket_closed(ctx, c, bracket_closed(ctx, a, b));
          ++local.checked;
          if (!residual.is_zero()) {
            local.note_failure("jacobi [" + keys[i].to_string() + ", " +
                               keys[j].to_string() + ", " +
                               keys[k].to_string() + "] residual " +
                               residual.to_string());
          }
        }
      });
}

Report verify_backend_agreement(BracketContext<PolyC>& ctx, int window,
                                int workers) {
  auto keys = basis_window(window);
  ctx.prewarm_psi(-(2 * window + 2), 2 * window + 2);
  const uint32_t n = static_cast<uint32_t>(keys.size());
  return run_chunked(
      static_cast<uint64_t>(n) * n, workers,
      [&](uint64_t begin, uint64_t end, Report& local) {
        for (uint64_t idx = begin; idx < end; ++idx) {
          uint32_t i = static_cast<uint32_t>(idx / n);
          uint32_t j = static_cast<uint32_t>(idx % n);
          ElementC a = ElementC::single(keys[i]);
          ElementC b = ElementC::single(keys[j]);
          ElementC residual =
              bracket_closed(ctx, a, b) - bracket_kassel(ctx, a, b);
          ++local.checked;
          if (!residual.is_zero()) {
            local.note_failure(
                pair_witness("backend", keys[i], keys[j], residual));
          }
        }
      });
}

}  // namespace djkm
