#include "catalog.hpp"

#include <algorithm>
#include <cstring>
#include <limits>
#include <random>
#include <set>
#include <unordered_map>

#include "errors.hpp"
#include "graphs.hpp"

namespace rcross {

namespace {

long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > (1LL << 62) / n) return 1LL << 62;  // saturate, caller only compares
  }
  return r;
}

// Packed +-1 vector (bit set = +1), up to C(10,3) = 120 bits.
struct SigKey {
  std::uint64_t a = 0, b = 0;
  bool operator==(const SigKey& o) const { return a == o.a && b == o.b; }
};

struct SigKeyHash {
  std::size_t operator()(const SigKey& k) const {
    return static_cast<std::size_t>(k.a * 0x9E3779B97F4A7C15ULL ^
                                    (k.b + 0xD1B54A32D192ED03ULL));
  }
};

// Witness preference: smallest max coordinate magnitude, then lexicographic
// coordinates. Order-free, so shard merges commute.
struct WitnessRec {
  Int maxabs;
  std::vector<Int> flat;  // x0,y0,x1,y1,...

  bool better_than(const WitnessRec& o) const {
    if (maxabs != o.maxabs) return maxabs < o.maxabs;
    return flat < o.flat;
  }
};

WitnessRec witness_record(const Configuration& config) {
  WitnessRec rec;
  rec.maxabs = 0;
  rec.flat.reserve(config.size() * 2);
  for (const auto& p : config) {
    if (denominator(p.x) != 1 || denominator(p.y) != 1)
      throw ParameterError("catalog witnesses must have integer coordinates");
    Int x = numerator(p.x), y = numerator(p.y);
    const Int ax = abs(x), ay = abs(y);
    if (ax > rec.maxabs) rec.maxabs = ax;
    if (ay > rec.maxabs) rec.maxabs = ay;
    rec.flat.push_back(x);
    rec.flat.push_back(y);
  }
  return rec;
}

Configuration record_to_config(const WitnessRec& rec) {
  Configuration out;
  for (std::size_t i = 0; i + 1 < rec.flat.size(); i += 2)
    out.push_back(ExactPoint{Rational(rec.flat[i]), Rational(rec.flat[i + 1])});
  return out;
}

void check_catalog_n(int n) {
  if (n < 3 || n > 10)
    throw ParameterError("catalog supports 3 <= n <= 10, got n=" + std::to_string(n));
}

// Orientation signs of all sorted grid-point triples, precomputed once so the
// subset sweep is pure table lookups.
class GridSigns {
 public:
  GridSigns(int side) : side_(side), N_(side * side), t_(static_cast<std::size_t>(N_) * N_ * N_, 0) {
    for (int a = 0; a < N_; ++a)
      for (int b = a + 1; b < N_; ++b)
        for (int c = b + 1; c < N_; ++c) {
          long long det = static_cast<long long>(x(b) - x(a)) * (y(c) - y(a)) -
                          static_cast<long long>(y(b) - y(a)) * (x(c) - x(a));
          t_[(static_cast<std::size_t>(a) * N_ + b) * N_ + c] =
              det > 0 ? 1 : (det < 0 ? -1 : 0);
        }
  }

  int x(int p) const { return p / side_; }
  int y(int p) const { return p % side_; }
  std::int8_t at(int a, int b, int c) const {
    return t_[(static_cast<std::size_t>(a) * N_ + b) * N_ + c];
  }

 private:
  int side_;
  int N_;
  std::vector<std::int8_t> t_;
};

class GridEnumerator {
 public:
  GridEnumerator(int n, int side, std::uint64_t seed)
      : n_(n), side_(side), N_(side * side), seed_(seed), signs_(side) {}

  OrderTypeCatalog run(long long budget) {
    bool exhaustive = binom(N_, n_) <= budget;
    if (exhaustive) {
      sweep(0, 0);
    } else {
      sample(budget);
    }
    OrderTypeCatalog cat;
    cat.n = n_;
    for (auto& [key, rec] : found_) cat.entries[key] = record_to_config(rec);
    cat.meta = CatalogMeta{"grid", side_, exhaustive, seed_, tested_};
    return cat;
  }

 private:
  void sweep(int depth, int start) {
    if (depth == n_) {
      process();
      return;
    }
    for (int p = start; p <= N_ - (n_ - depth); ++p) {
      bool ok = true;
      for (int i = 0; i < depth && ok; ++i)
        for (int j = i + 1; j < depth; ++j)
          if (signs_.at(chosen_[i], chosen_[j], p) == 0) {
            ok = false;
            break;
          }
      if (!ok) continue;
      chosen_[depth] = p;
      sweep(depth + 1, p + 1);
    }
  }

  void sample(long long budget) {
    std::mt19937_64 rng(mix_seed(seed_, 0x6F7263617453ULL));
    for (long long draw = 0; draw < budget; ++draw) {
      // Floyd's distinct sampling of an n-subset of [0, N)
      std::set<int> s;
      for (int j = N_ - n_; j < N_; ++j) {
        int t = static_cast<int>(rng() % static_cast<std::uint64_t>(j + 1));
        if (!s.insert(t).second) s.insert(j);
      }
      int d = 0;
      for (int p : s) chosen_[d++] = p;
      bool ok = true;
      for (int i = 0; i < n_ && ok; ++i)
        for (int j = i + 1; j < n_ && ok; ++j)
          for (int k = j + 1; k < n_ && ok; ++k)
            if (signs_.at(chosen_[i], chosen_[j], chosen_[k]) == 0) ok = false;
      if (ok) process();
    }
  }

  void process() {
    ++tested_;
    SigKey key;
    int idx = 0;
    std::array<std::int8_t, 120> raw{};
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        for (int k = j + 1; k < n_; ++k, ++idx) {
          std::int8_t s = signs_.at(chosen_[i], chosen_[j], chosen_[k]);
          raw[idx] = s;
          if (s > 0) {
            if (idx < 64)
              key.a |= 1ULL << idx;
            else
              key.b |= 1ULL << (idx - 64);
          }
        }

    auto memo_it = memo_.find(key);
    if (memo_it == memo_.end()) {
      OrderTypeSignature sig;
      sig.n = n_;
      sig.signs.assign(raw.begin(), raw.begin() + idx);
      OrderTypeSignature canon = canonicalize(sig);
      auto [it, fresh] = found_.try_emplace(std::move(canon));
      if (fresh) it->second = candidate();
      memo_it = memo_.emplace(key, it).first;
      if (fresh) return;
    }
    WitnessRec cand = candidate();
    WitnessRec& cur = memo_it->second->second;
    if (cand.better_than(cur)) cur = std::move(cand);
  }

  WitnessRec candidate() const {
    WitnessRec rec;
    rec.maxabs = 0;
    for (int i = 0; i < n_; ++i) {
      int p = chosen_[i];
      rec.maxabs = std::max(rec.maxabs, Int(std::max(signs_.x(p), signs_.y(p))));
      rec.flat.push_back(signs_.x(p));
      rec.flat.push_back(signs_.y(p));
    }
    return rec;
  }

  int n_;
  int side_;
  int N_;
  std::uint64_t seed_;
  GridSigns signs_;
  std::array<int, 10> chosen_{};
  std::uint64_t tested_ = 0;
  std::map<OrderTypeSignature, WitnessRec> found_;
  std::unordered_map<SigKey, std::map<OrderTypeSignature, WitnessRec>::iterator,
                     SigKeyHash>
      memo_;
};

void merge_entry(OrderTypeCatalog& cat, const OrderTypeSignature& key,
                 const Configuration& witness) {
  auto it = cat.entries.find(key);
  if (it == cat.entries.end()) {
    cat.entries.emplace(key, witness);
    return;
  }
  if (witness_record(witness).better_than(witness_record(it->second)))
    it->second = witness;
}

void put_u32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

void put_u64(std::string& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

std::uint32_t get_u32(const std::string& s, std::size_t off) {
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i)
    v |= static_cast<std::uint32_t>(static_cast<unsigned char>(s[off + i])) << (8 * i);
  return v;
}

std::uint64_t get_u64(const std::string& s, std::size_t off) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i)
    v |= static_cast<std::uint64_t>(static_cast<unsigned char>(s[off + i])) << (8 * i);
  return v;
}

constexpr char kMagic[4] = {'R', 'X', 'O', 'T'};
constexpr std::uint32_t kVersion = 1;

}  // namespace

OrderTypeCatalog enumerate_grid_order_types(int n, int grid_side, long long budget,
                                            std::uint64_t seed) {
  check_catalog_n(n);
  if (grid_side < 2) throw ParameterError("grid_side must be at least 2");
  if (grid_side > 16)
    throw ParameterError("grid_side above 16 is unsupported (sign table size)");
  if (grid_side * grid_side < n)
    throw ParameterError("grid has fewer than n points");
  if (budget < 0) throw ParameterError("budget must be nonnegative");
  if (budget == 0) budget = std::numeric_limits<long long>::max();  // exhaustive
  return GridEnumerator(n, grid_side, seed).run(budget);
}

OrderTypeCatalog ingest_database(int n, const std::string& bytes) {
  check_catalog_n(n);
  const int bpc = n <= 8 ? 1 : 2;
  const std::size_t record = static_cast<std::size_t>(2) * n * bpc;
  if (bytes.size() % record != 0)
    throw FormatError("database length " + std::to_string(bytes.size()) +
                      " is not a multiple of the record size " +
                      std::to_string(record));
  OrderTypeCatalog cat;
  cat.n = n;
  const std::size_t count = bytes.size() / record;
  for (std::size_t r = 0; r < count; ++r) {
    Configuration pts;
    const unsigned char* base =
        reinterpret_cast<const unsigned char*>(bytes.data()) + r * record;
    for (int i = 0; i < n; ++i) {
      long long x, y;
      if (bpc == 1) {
        x = base[2 * i];
        y = base[2 * i + 1];
      } else {
        x = base[4 * i] | (base[4 * i + 1] << 8);
        y = base[4 * i + 2] | (base[4 * i + 3] << 8);
      }
      pts.push_back(make_point(x, y));
    }
    OrderTypeSignature raw;
    try {
      raw = order_type(pts);
    } catch (const DegeneracyError& e) {
      throw DegeneracyError("record " + std::to_string(r) + ": " + e.what());
    }
    merge_entry(cat, canonicalize(raw), pts);
  }
  cat.meta = CatalogMeta{"ingest", 0, true, 0, count};
  return cat;
}

std::string save_catalog(const OrderTypeCatalog& cat) {
  check_catalog_n(cat.n);
  const std::size_t sig_len = static_cast<std::size_t>(choose3(cat.n));
  const std::size_t sig_bytes = (sig_len + 7) / 8;
  std::string out;
  out.append(kMagic, 4);
  put_u32(out, kVersion);
  put_u32(out, static_cast<std::uint32_t>(cat.n));
  put_u64(out, cat.entries.size());
  for (const auto& [key, witness] : cat.entries) {
    if (key.signs.size() != sig_len) throw FormatError("malformed catalog key");
    std::string packed(sig_bytes, '\0');
    for (std::size_t i = 0; i < sig_len; ++i)
      if (key.signs[i] > 0) packed[i >> 3] |= static_cast<char>(1 << (i & 7));
    out += packed;
    if (static_cast<int>(witness.size()) != cat.n)
      throw FormatError("witness size does not match catalog n");
    for (const auto& p : witness) {
      if (denominator(p.x) != 1 || denominator(p.y) != 1)
        throw FormatError("witness coordinates must be integers");
      Int xs = numerator(p.x), ys = numerator(p.y);
      static const Int lim = Int(1) << 31;
      if (xs >= lim || xs < -lim || ys >= lim || ys < -lim)
        throw FormatError("witness coordinate exceeds int32 range");
      put_u32(out, static_cast<std::uint32_t>(xs.convert_to<std::int32_t>()));
      put_u32(out, static_cast<std::uint32_t>(ys.convert_to<std::int32_t>()));
    }
  }
  return out;
}

OrderTypeCatalog load_catalog(const std::string& blob) {
  if (blob.size() < 20) throw FormatError("catalog blob too short for header");
  if (std::memcmp(blob.data(), kMagic, 4) != 0)
    throw FormatError("bad catalog magic");
  std::uint32_t version = get_u32(blob, 4);
  if (version != kVersion)
    throw FormatError("unsupported catalog version " + std::to_string(version));
  int n = static_cast<int>(get_u32(blob, 8));
  check_catalog_n(n);
  std::uint64_t count = get_u64(blob, 12);
  const std::size_t sig_len = static_cast<std::size_t>(choose3(n));
  const std::size_t sig_bytes = (sig_len + 7) / 8;
  const std::size_t entry_bytes = sig_bytes + static_cast<std::size_t>(8) * n;
  if (blob.size() != 20 + count * entry_bytes)
    throw FormatError("catalog size does not match header (n or count wrong)");

  OrderTypeCatalog cat;
  cat.n = n;
  std::size_t off = 20;
  const OrderTypeSignature* prev = nullptr;
  for (std::uint64_t e = 0; e < count; ++e) {
    OrderTypeSignature key;
    key.n = n;
    key.signs.resize(sig_len);
    for (std::size_t i = 0; i < sig_len; ++i)
      key.signs[i] =
          (static_cast<unsigned char>(blob[off + (i >> 3)]) >> (i & 7)) & 1 ? 1 : -1;
    off += sig_bytes;
    Configuration witness;
    for (int i = 0; i < n; ++i) {
      auto xs = static_cast<std::int32_t>(get_u32(blob, off));
      auto ys = static_cast<std::int32_t>(get_u32(blob, off + 4));
      off += 8;
      witness.push_back(make_point(xs, ys));
    }
    if (prev && !(*prev < key))
      throw FormatError("catalog entries out of order or duplicated");
    OrderTypeSignature check;
    try {
      check = canonicalize(order_type(witness));
    } catch (const DegeneracyError&) {
      throw FormatError("entry " + std::to_string(e) + ": witness is degenerate");
    }
    if (!(check == key))
      throw FormatError("entry " + std::to_string(e) +
                        ": witness does not realize its key");
    prev = &cat.entries.emplace(std::move(key), std::move(witness)).first->first;
  }
  cat.meta = CatalogMeta{"file", 0, false, 0, count};
  return cat;
}

OrderTypeCatalog merge_catalogs(const OrderTypeCatalog& a, const OrderTypeCatalog& b) {
  if (a.n != b.n) throw ParameterError("cannot merge catalogs of different n");
  OrderTypeCatalog out = a;
  for (const auto& [key, witness] : b.entries) merge_entry(out, key, witness);
  out.meta.source = "merge";
  out.meta.exhaustive = a.meta.exhaustive && b.meta.exhaustive;
  out.meta.tested = a.meta.tested + b.meta.tested;
  return out;
}

void insert_witness(OrderTypeCatalog& cat, const Configuration& witness) {
  if (cat.n == 0) cat.n = static_cast<int>(witness.size());
  check_catalog_n(cat.n);
  if (static_cast<int>(witness.size()) != cat.n)
    throw ParameterError("witness size does not match catalog n");
  witness_record(witness);  // validates integrality
  merge_entry(cat, canonicalize(order_type(witness)), witness);
}

}  // namespace rcross
