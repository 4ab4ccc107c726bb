#include "stpd/archive.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string_view>

#include "stpd/bwt.hpp"
#include "stpd/lpf.hpp"

namespace stpd {

namespace {

constexpr char kMagic[5] = {'S', 'T', 'P', 'D', '1'};
constexpr std::uint16_t kEndianTag = 0x0102;

void write_u8(std::ostream& out, std::uint8_t v) { out.put(static_cast<char>(v)); }

void write_uint(std::ostream& out, std::uint64_t v, int bytes) {
  for (int k = 0; k < bytes; ++k) write_u8(out, static_cast<std::uint8_t>(v >> (8 * k)));
}

std::uint8_t read_u8(std::istream& in) {
  const int c = in.get();
  if (c < 0) throw CorruptionError("archive: unexpected end of stream");
  return static_cast<std::uint8_t>(c);
}

std::uint64_t read_uint(std::istream& in, int bytes) {
  std::uint64_t v = 0;
  for (int k = 0; k < bytes; ++k) v |= std::uint64_t(read_u8(in)) << (8 * k);
  return v;
}

void write_pos_vector(std::ostream& out, const std::vector<pos_t>& v) {
  write_uint(out, v.size(), 8);
  for (pos_t x : v) write_uint(out, x, 8);
}

std::vector<pos_t> read_pos_vector(std::istream& in, std::uint64_t limit) {
  const std::uint64_t len = read_uint(in, 8);
  if (len > limit) throw CorruptionError("archive: array length exceeds sanity limit");
  std::vector<pos_t> v(len);
  for (auto& x : v) x = read_uint(in, 8);
  return v;
}

void write_phi(std::ostream& out, const PhiStructure& phi) {
  write_uint(out, phi.sample_count(), 8);
  for (pos_t k = 0; k < phi.sample_count(); ++k) {
    write_uint(out, phi.keys()[k], 8);
    write_uint(out, phi.targets()[k], 8);
    write_u8(out, phi.wraps()[k]);
  }
}

PhiStructure read_phi(std::istream& in, PhiVariant variant, pos_t n) {
  const std::uint64_t cnt = read_uint(in, 8);
  if (cnt > n + 2) throw CorruptionError("archive: too many phi samples");
  std::vector<pos_t> keys(cnt), targets(cnt);
  std::vector<std::uint8_t> wraps(cnt);
  for (std::uint64_t k = 0; k < cnt; ++k) {
    keys[k] = read_uint(in, 8);
    targets[k] = read_uint(in, 8);
    wraps[k] = read_u8(in);
  }
  return PhiStructure::from_parts(variant, n, std::move(keys), std::move(targets), std::move(wraps));
}

}  // namespace

IndexArchive IndexArchive::build(Text text, std::uint64_t block_words, std::uint64_t kmax_cap,
                                 std::uint64_t fingerprint_seed) {
  IndexArchive a;
  a.block_words = block_words;
  a.kmax_cap = kmax_cap;
  a.fingerprint_seed = fingerprint_seed;

  IndexPermutation sa = build_sa(text);
  IndexPermutation pa = build_pa(text);
  for (int k = 0; k < kPermKindCount; ++k) {
    a.pda[k] = build_pda(text, static_cast<PermKind>(k)).positions;
  }
  a.phi_sa = PhiStructure::build(text, PhiVariant::SA, sa, bwt(text, sa));
  a.phi_pa = PhiStructure::build(text, PhiVariant::PA, pa, cobwt(text, pa));

  StLexTree tree = StLexTree::build(text, {fingerprint_seed});
  a.stlex = tree.stlex();
  a.istar = tree.istar();
  a.text = std::move(text);
  return a;
}

void IndexArchive::save(std::ostream& out) const {
  out.write(kMagic, sizeof(kMagic));
  write_uint(out, kEndianTag, 2);
  write_uint(out, kVersion, 4);
  write_u8(out, 1);  // text payload stored inline
  write_uint(out, fingerprint_seed, 8);
  write_uint(out, block_words, 8);
  write_uint(out, kmax_cap, 8);

  write_uint(out, text.size(), 8);
  for (pos_t i = 1; i <= text.size(); ++i) {
    const sym_t s = text.at(i);
    if (s > 0xff) throw std::invalid_argument("archive: only byte-alphabet texts are serializable");
    write_u8(out, static_cast<std::uint8_t>(s));
  }

  write_u8(out, kPermKindCount);
  for (int k = 0; k < kPermKindCount; ++k) {
    write_u8(out, static_cast<std::uint8_t>(k));
    write_pos_vector(out, pda[k]);
  }
  write_phi(out, phi_sa);
  write_phi(out, phi_pa);
  write_pos_vector(out, stlex);
  write_u8(out, static_cast<std::uint8_t>(istar));
  if (!out) throw std::runtime_error("archive: write failed");
}

IndexArchive IndexArchive::load(std::istream& in) {
  char magic[5];
  in.read(magic, sizeof(magic));
  if (!in || std::string_view(magic, 5) != std::string_view(kMagic, 5)) {
    throw CorruptionError("archive: bad magic");
  }
  if (read_uint(in, 2) != kEndianTag) throw CorruptionError("archive: bad endianness tag");
  const std::uint64_t version = read_uint(in, 4);
  if (version != kVersion) throw CorruptionError("archive: unsupported format version");
  if (read_u8(in) != 1) throw CorruptionError("archive: unsupported text payload kind");

  IndexArchive a;
  a.fingerprint_seed = read_uint(in, 8);
  a.block_words = read_uint(in, 8);
  a.kmax_cap = read_uint(in, 8);

  const std::uint64_t n = read_uint(in, 8);
  if (n == 0) throw CorruptionError("archive: empty text");
  std::vector<sym_t> syms(n);
  for (auto& s : syms) s = read_u8(in);
  a.text = Text::from_symbols(std::move(syms));

  if (read_u8(in) != kPermKindCount) throw CorruptionError("archive: bad pda array count");
  for (int k = 0; k < kPermKindCount; ++k) {
    if (read_u8(in) != k) throw CorruptionError("archive: pda arrays out of order");
    a.pda[k] = read_pos_vector(in, n + 1);
  }
  a.phi_sa = read_phi(in, PhiVariant::SA, n);
  a.phi_pa = read_phi(in, PhiVariant::PA, n);
  a.stlex = read_pos_vector(in, 2 * n + 1);
  a.istar = read_u8(in);
  return a;
}

StLexTree IndexArchive::make_stlex_tree() const {
  return StLexTree::from_parts(text, stlex, istar, phi_sa, {fingerprint_seed});
}

StColexIndex IndexArchive::make_stcolex_index() const {
  StColexIndex::Config cfg;
  cfg.block_words = block_words;
  cfg.kmax_cap = kmax_cap;
  cfg.fingerprint_seed = fingerprint_seed;
  return StColexIndex::from_parts(text, pda[static_cast<int>(PermKind::COLEX)], phi_pa, cfg);
}

GeneralLocator IndexArchive::make_general_locator(PermKind kind) const {
  return GeneralLocator::build(text, kind, pda[static_cast<int>(kind)], {fingerprint_seed});
}

}  // namespace stpd
