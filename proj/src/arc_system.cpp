#include "flipforge/arc_system.hpp"

#include <algorithm>
#include <sstream>

#include "flipforge/errors.hpp"

namespace flipforge {

namespace {

std::size_t edit_distance(std::string_view a, std::string_view b) {
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      std::size_t up = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diag = up;
    }
  }
  return row[b.size()];
}

// Collapses runs of blanks to one space and strips the ends.
std::string normalize_token(std::string_view raw) {
  std::string out;
  bool pending_space = false;
  for (char c : raw) {
    if (c == ' ' || c == '\t') {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::vector<std::string> split_label(std::string_view label) {
  std::vector<std::string> tokens;
  if (normalize_token(label).empty()) return tokens;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = label.find(',', start);
    tokens.push_back(normalize_token(label.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return tokens;
}

std::string join_label(const std::vector<std::string>& tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += tokens[i];
  }
  return out;
}

ArcSystem::ArcSystem(std::vector<std::string> tokens, std::vector<ArcSet> compat,
                     int triangulation_size, ArcSet radials)
    : tokens_(std::move(tokens)),
      compat_(std::move(compat)),
      triangulation_size_(triangulation_size),
      radials_(radials) {
  if (tokens_.size() != compat_.size()) {
    throw ModelError("arc system: token and compatibility tables differ in size");
  }
  if (tokens_.size() > static_cast<std::size_t>(kMaxArcs)) {
    throw CapExceeded("arc universe of " + std::to_string(tokens_.size()) +
                      " arcs exceeds the supported maximum of " + std::to_string(kMaxArcs));
  }
  for (int a = 0; a < size(); ++a) {
    if (!index_.emplace(tokens_[a], a).second) {
      throw ModelError("arc system: duplicate token '" + tokens_[a] + "'");
    }
    if (!compat_[a].test(a)) throw ModelError("arc system: compatibility is not reflexive");
    for (int b = 0; b < a; ++b) {
      if (compat_[a].test(b) != compat_[b].test(a)) {
        throw ModelError("arc system: compatibility is not symmetric for '" + tokens_[a] +
                         "' and '" + tokens_[b] + "'");
      }
    }
  }
}

std::optional<int> ArcSystem::find(std::string_view token) const {
  auto it = index_.find(normalize_token(token));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ArcSet ArcSystem::universe() const {
  ArcSet all;
  for (int a = 0; a < size(); ++a) all.set(a);
  return all;
}

bool ArcSystem::pairwise_compatible(const ArcSet& s) const {
  bool ok = true;
  s.for_each([&](int a) { ok = ok && s.subset_of(compat_[a]); });
  return ok;
}

ArcSet ArcSystem::completions(const ArcSet& s) const {
  ArcSet cand = universe() - s;
  s.for_each([&](int a) { cand &= compat_[a]; });
  return cand;
}

bool ArcSystem::is_triangulation(const ArcSet& s) const {
  return pairwise_compatible(s) && completions(s).empty();
}

std::optional<int> ArcSystem::flip_partner(const ArcSet& t, int e) const {
  if (e < 0 || e >= size() || !t.test(e)) {
    throw InputError("flip: arc is not part of the triangulation");
  }
  ArcSet cand = completions(t.without(e)).without(e);
  switch (cand.count()) {
    case 0:
      return std::nullopt;
    case 1:
      return cand.first();
    default:
      throw ModelError("flip: arc '" + tokens_[e] + "' of " + label(t) +
                       " has several completions: " + label(cand));
  }
}

std::vector<Flip> ArcSystem::flips(const ArcSet& t) const {
  std::vector<Flip> out;
  t.for_each([&](int e) {
    if (auto partner = flip_partner(t, e)) {
      out.push_back({t.without(e).with(*partner), e, *partner});
    }
  });
  return out;
}

std::vector<std::string> ArcSystem::label_tokens(const ArcSet& t) const {
  std::vector<std::string> out;
  t.for_each([&](int a) { out.push_back(tokens_[a]); });
  return out;
}

std::string ArcSystem::label(const ArcSet& t) const { return join_label(label_tokens(t)); }

ArcSet ArcSystem::parse_label(std::string_view label) const {
  ArcSet s;
  for (const std::string& tok : split_label(label)) {
    auto idx = find(tok);
    if (!idx) {
      std::string best;
      std::size_t best_d = std::string::npos;
      for (const auto& cand : tokens_) {
        std::size_t d = edit_distance(tok, cand);
        if (d < best_d) {
          best_d = d;
          best = cand;
        }
      }
      std::ostringstream msg;
      msg << "unknown arc token '" << tok << "'";
      if (!best.empty()) msg << " (nearest valid token: '" << best << "')";
      throw InputError(msg.str());
    }
    if (s.test(*idx)) throw InputError("duplicate arc token '" + tok + "'");
    s.set(*idx);
  }
  return s;
}

ArcSet ArcSystem::complete(ArcSet partial) const {
  for (int a = 0; a < size(); ++a) {
    if (!partial.test(a) && partial.subset_of(compat_[a])) partial.set(a);
  }
  return partial;
}

}  // namespace flipforge
