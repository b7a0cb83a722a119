#include "tdp/families.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tdp {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

long long checked_order(long long order) {
  if (order > kMaxVertices) {
    throw CapacityError("family order " + std::to_string(order) +
                        " exceeds capacity " + std::to_string(kMaxVertices));
  }
  return order;
}

}  // namespace

Graph make_complete(int n) {
  require(n >= 0, "complete: n must be >= 0");
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph make_path(int n) {
  require(n >= 0, "path: n must be >= 0");
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph make_cycle(int n) {
  require(n >= 3, "cycle: n must be >= 3");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph make_star(int n) {
  require(n >= 2, "star: n must be >= 2");
  return make_star_k1(n - 1);
}

Graph make_star_k1(int leaves) {
  require(leaves >= 1, "star: at least one leaf");
  Graph g(static_cast<int>(checked_order(leaves + 1)));
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph make_lollipop(int m, int n) {
  require(m >= 3, "lollipop: m must be >= 3");
  require(n >= 1, "lollipop: n must be >= 1");
  Graph g(static_cast<int>(checked_order(static_cast<long long>(m) + n)));
  for (int u = 0; u < m; ++u) {
    for (int v = u + 1; v < m; ++v) g.add_edge(u, v);
  }
  for (int i = 0; i + 1 < n; ++i) g.add_edge(m + i, m + i + 1);
  g.add_edge(0, m);
  return g;
}

Graph make_friendship(int n) { return make_generalized_friendship(n, 3); }

Graph make_generalized_friendship(int n, int q) {
  require(n >= 1, "generalized_friendship: n must be >= 1");
  require(q >= 3, "generalized_friendship: q must be >= 3");
  Graph g(static_cast<int>(
      checked_order(static_cast<long long>(n) * (q - 1) + 1)));
  for (int i = 0; i < n; ++i) {
    int base = 1 + i * (q - 1);
    int last = base + q - 2;
    for (int v = base; v < last; ++v) g.add_edge(v, v + 1);
    g.add_edge(0, base);
    g.add_edge(0, last);
  }
  return g;
}

Graph make_firecracker(int n, int k) {
  require(n >= 1, "firecracker: n must be >= 1");
  require(k >= 2, "firecracker: k must be >= 2");
  return make_generalized_firecracker(std::vector<int>(n, k));
}

Graph make_generalized_firecracker(const std::vector<int>& ks) {
  require(!ks.empty(), "generalized_firecracker: at least one star");
  long long order = 0;
  for (int k : ks) {
    require(k >= 2, "generalized_firecracker: each star needs >= 2 vertices");
    order += k;
  }
  Graph g(static_cast<int>(checked_order(order)));
  std::vector<int> offsets;
  int off = 0;
  for (int k : ks) {
    offsets.push_back(off);
    for (int j = 1; j < k; ++j) g.add_edge(off, off + j);
    off += k;
  }
  for (std::size_t i = 0; i + 1 < offsets.size(); ++i) {
    g.add_edge(offsets[i] + 1, offsets[i + 1] + 1);
  }
  return g;
}

Graph make_book(int n) {
  require(n >= 1, "book: n must be >= 1");
  Graph g(static_cast<int>(checked_order(2LL * n + 2)));
  g.add_edge(0, 1);
  for (int i = 0; i < n; ++i) {
    int p = 2 + 2 * i;
    int q = 3 + 2 * i;
    g.add_edge(0, p);
    g.add_edge(p, q);
    g.add_edge(q, 1);
  }
  return g;
}

Graph make_wheel(int n) {
  require(n >= 3, "wheel: n must be >= 3");
  Graph g(static_cast<int>(checked_order(n + 1LL)));
  for (int v = 1; v <= n; ++v) {
    g.add_edge(0, v);
    g.add_edge(v, v % n + 1);
  }
  return g;
}

Graph make_helm(int n, int m) {
  require(n >= 3, "helm: n must be >= 3");
  require(m >= 1, "helm: m must be >= 1");
  Graph g(static_cast<int>(
      checked_order(static_cast<long long>(n) * (m + 1) + 1)));
  for (int v = 1; v <= n; ++v) {
    g.add_edge(0, v);
    g.add_edge(v, v % n + 1);
  }
  for (int j = 1; j <= n; ++j) {
    for (int t = 0; t < m; ++t) g.add_edge(j, n + (j - 1) * m + t + 1);
  }
  return g;
}

Graph corona(const Graph& g, const Graph& h) {
  require(h.order() >= 1, "corona: copy graph must be nonempty");
  const int ng = g.order();
  const int nh = h.order();
  Graph out(static_cast<int>(
      checked_order(static_cast<long long>(ng) * (1 + nh))));
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (int i = 0; i < ng; ++i) {
    int base = ng + i * nh;
    for (int v = 0; v < nh; ++v) out.add_edge(i, base + v);
    for (auto [u, v] : h.edges()) out.add_edge(base + u, base + v);
  }
  return out;
}

Graph sunlike(const Graph& g, const std::vector<int>& ms) {
  require(static_cast<int>(ms.size()) == g.order(),
          "sunlike: one pendant count per vertex");
  long long order = g.order();
  for (int m : ms) {
    require(m >= 1, "sunlike: each vertex needs >= 1 pendant");
    order += m;
  }
  Graph out(static_cast<int>(checked_order(order)));
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  int base = g.order();
  for (int i = 0; i < g.order(); ++i) {
    for (int t = 0; t < ms[i]; ++t) out.add_edge(i, base + t);
    base += ms[i];
  }
  return out;
}

Graph p3_attach(const Graph& h) {
  const int n = h.order();
  Graph out(static_cast<int>(checked_order(3LL * n)));
  for (auto [u, v] : h.edges()) out.add_edge(u, v);
  for (int i = 0; i < n; ++i) {
    out.add_edge(i, n + 2 * i);
    out.add_edge(n + 2 * i, n + 2 * i + 1);
  }
  return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph out(static_cast<int>(
      checked_order(static_cast<long long>(a.order()) + b.order())));
  for (auto [u, v] : a.edges()) out.add_edge(u, v);
  for (auto [u, v] : b.edges()) out.add_edge(a.order() + u, a.order() + v);
  return out;
}

namespace {

struct KindInfo {
  FamilyKind kind;
  const char* name;
  std::vector<const char*> scalars;  // required scalar parameters, in order
  bool takes_list;                   // accepts the ks list instead
};

const std::vector<KindInfo>& kinds() {
  static const std::vector<KindInfo> table = {
      {FamilyKind::kComplete, "complete", {"n"}, false},
      {FamilyKind::kPath, "path", {"n"}, false},
      {FamilyKind::kCycle, "cycle", {"n"}, false},
      {FamilyKind::kStar, "star", {"n"}, false},
      {FamilyKind::kLollipop, "lollipop", {"m", "n"}, false},
      {FamilyKind::kFriendship, "friendship", {"n"}, false},
      {FamilyKind::kGeneralizedFriendship,
       "generalized_friendship",
       {"n", "q"},
       false},
      {FamilyKind::kFirecracker, "firecracker", {"n", "k"}, false},
      {FamilyKind::kGeneralizedFirecracker, "generalized_firecracker", {},
       true},
      {FamilyKind::kBook, "book", {"n"}, false},
      {FamilyKind::kWheel, "wheel", {"n"}, false},
      {FamilyKind::kHelm, "helm", {"n", "m"}, false},
  };
  return table;
}

const KindInfo& kind_info(FamilyKind kind) {
  for (const auto& info : kinds()) {
    if (info.kind == kind) return info;
  }
  throw std::logic_error("unknown family kind");
}

long long parse_int(std::string_view token, std::size_t at) {
  std::string s(token);
  char* end = nullptr;
  errno = 0;
  long long value = std::strtoll(s.c_str(), &end, 10);
  if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE) {
    throw ParseError("family spec: malformed integer '" + s + "'", at);
  }
  return value;
}

}  // namespace

FamilySpec parse_family_spec(std::string_view text) {
  FamilySpec spec;
  const std::size_t colon = text.find(':');
  const std::string_view kind_name = text.substr(0, colon);

  const KindInfo* info = nullptr;
  for (const auto& k : kinds()) {
    if (kind_name == k.name) {
      info = &k;
      break;
    }
  }
  if (!info) {
    throw ParseError(
        "family spec: unknown kind '" + std::string(kind_name) + "'", 0);
  }
  spec.kind = info->kind;

  std::string last_key;
  std::size_t pos = colon == std::string_view::npos ? text.size() : colon + 1;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view token = text.substr(pos, comma - pos);
    if (token.empty()) {
      throw ParseError("family spec: empty parameter token", pos);
    }
    const std::size_t eq = token.find('=');
    if (eq == std::string_view::npos) {
      // Bare value: extends the list started by the previous key.
      if (last_key.empty()) {
        throw ParseError("family spec: value without a key", pos);
      }
      spec.params[last_key].push_back(parse_int(token, pos));
    } else {
      std::string key(token.substr(0, eq));
      if (key.empty()) {
        throw ParseError("family spec: empty parameter name", pos);
      }
      if (spec.params.count(key)) {
        throw ParseError("family spec: duplicate parameter '" + key + "'",
                         pos);
      }
      spec.params[key].push_back(parse_int(token.substr(eq + 1), pos + eq + 1));
      last_key = key;
    }
    pos = comma + 1;
  }

  // Arity check against the kind's signature.
  if (info->takes_list) {
    auto it = spec.params.find("ks");
    if (it == spec.params.end()) {
      throw ParseError("family spec: " + std::string(info->name) +
                           " requires parameter ks",
                       0);
    }
    if (spec.params.size() != 1) {
      throw ParseError("family spec: " + std::string(info->name) +
                           " takes only ks",
                       0);
    }
  } else {
    for (const char* want : info->scalars) {
      auto it = spec.params.find(want);
      if (it == spec.params.end()) {
        throw ParseError("family spec: " + std::string(info->name) +
                             " requires parameter " + want,
                         0);
      }
      if (it->second.size() != 1) {
        throw ParseError("family spec: parameter " + std::string(want) +
                             " takes one value",
                         0);
      }
    }
    if (spec.params.size() != info->scalars.size()) {
      throw ParseError("family spec: unexpected parameter for " +
                           std::string(info->name),
                       0);
    }
  }
  return spec;
}

std::string family_name(FamilyKind kind) { return kind_info(kind).name; }

std::string to_string(const FamilySpec& spec) {
  const KindInfo& info = kind_info(spec.kind);
  std::ostringstream out;
  out << info.name;
  char sep = ':';
  if (info.takes_list) {
    out << sep << "ks=";
    const auto& ks = spec.params.at("ks");
    for (std::size_t i = 0; i < ks.size(); ++i) {
      if (i) out << ',';
      out << ks[i];
    }
  } else {
    for (const char* key : info.scalars) {
      out << sep << key << '=' << spec.params.at(key).front();
      sep = ',';
    }
  }
  return out.str();
}

Graph make_family(const FamilySpec& spec) {
  auto scalar = [&spec](const char* key) {
    long long v = spec.params.at(key).front();
    if (v < -kMaxVertices || v > 4 * kMaxVertices) {
      throw std::invalid_argument("family parameter " + std::string(key) +
                                  " out of range");
    }
    return static_cast<int>(v);
  };
  switch (spec.kind) {
    case FamilyKind::kComplete:
      return make_complete(scalar("n"));
    case FamilyKind::kPath:
      return make_path(scalar("n"));
    case FamilyKind::kCycle:
      return make_cycle(scalar("n"));
    case FamilyKind::kStar:
      return make_star(scalar("n"));
    case FamilyKind::kLollipop:
      return make_lollipop(scalar("m"), scalar("n"));
    case FamilyKind::kFriendship:
      return make_friendship(scalar("n"));
    case FamilyKind::kGeneralizedFriendship:
      return make_generalized_friendship(scalar("n"), scalar("q"));
    case FamilyKind::kFirecracker:
      return make_firecracker(scalar("n"), scalar("k"));
    case FamilyKind::kGeneralizedFirecracker: {
      std::vector<int> ks;
      for (long long v : spec.params.at("ks")) {
        if (v < 0 || v > kMaxVertices) {
          throw std::invalid_argument("family parameter ks entry out of range");
        }
        ks.push_back(static_cast<int>(v));
      }
      return make_generalized_firecracker(ks);
    }
    case FamilyKind::kBook:
      return make_book(scalar("n"));
    case FamilyKind::kWheel:
      return make_wheel(scalar("n"));
    case FamilyKind::kHelm:
      return make_helm(scalar("n"), scalar("m"));
  }
  throw std::logic_error("unhandled family kind");
}

}  // namespace tdp
