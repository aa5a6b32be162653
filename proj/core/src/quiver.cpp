#include "grm/quiver.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>

#include "grm/errors.hpp"

namespace grm {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    for (std::size_t j = i + 1; j < vertices_.size(); ++j)
      if (vertices_[i] == vertices_[j]) throw InputError("duplicate vertex name");
  for (const Arrow& a : arrows_)
    if (a.src >= vertices_.size() || a.dst >= vertices_.size())
      throw InputError("arrow endpoint out of range");
  // Kahn's algorithm; a leftover vertex means a directed cycle.
  std::vector<std::size_t> indeg(vertices_.size(), 0);
  for (const Arrow& a : arrows_) ++indeg[a.dst];
  std::vector<std::size_t> queue;
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    if (indeg[v] == 0) queue.push_back(v);
  std::size_t seen = 0;
  while (!queue.empty()) {
    std::size_t v = queue.back();
    queue.pop_back();
    ++seen;
    for (const Arrow& a : arrows_)
      if (a.src == v && --indeg[a.dst] == 0) queue.push_back(a.dst);
  }
  if (seen != vertices_.size()) throw InputError("quiver has a directed cycle");
}

std::optional<std::size_t> Quiver::vertex_index(std::string_view name) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i] == name) return i;
  return std::nullopt;
}

std::optional<std::size_t> Quiver::arrow_index(std::string_view name) const {
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].name == name) return i;
  return std::nullopt;
}

std::shared_ptr<const Quiver> Quiver::a3_paper() {
  return std::make_shared<const Quiver>(
      std::vector<std::string>{"1", "2", "3"},
      std::vector<Arrow>{{"a", 1, 0}, {"b", 1, 2}});
}

std::shared_ptr<const Quiver> Quiver::linear(std::size_t n) {
  if (n < 1) throw InputError("linear quiver needs at least one vertex");
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  for (std::size_t i = 1; i <= n; ++i) vertices.push_back(std::to_string(i));
  for (std::size_t i = 0; i + 1 < n; ++i)
    arrows.push_back(Arrow{"a" + std::to_string(i + 1), i, i + 1});
  return std::make_shared<const Quiver>(std::move(vertices), std::move(arrows));
}

std::shared_ptr<const Quiver> Quiver::kronecker() {
  return std::make_shared<const Quiver>(std::vector<std::string>{"1", "2"},
                                        std::vector<Arrow>{{"a", 0, 1}, {"b", 0, 1}});
}

QuiverRep QuiverRep::zero(std::shared_ptr<const Quiver> quiver, PrimeField field,
                          std::vector<std::size_t> dims) {
  QuiverRep rep;
  rep.field = field;
  rep.dims = std::move(dims);
  if (rep.dims.size() != quiver->vertex_count())
    throw InputError("dimension vector does not match vertex count");
  for (std::size_t a = 0; a < quiver->arrow_count(); ++a) {
    const Arrow& arrow = quiver->arrow(a);
    rep.mats.emplace_back(rep.dims[arrow.dst], rep.dims[arrow.src], field);
  }
  rep.quiver = std::move(quiver);
  return rep;
}

std::size_t QuiverRep::total_dim() const {
  std::size_t total = 0;
  for (std::size_t d : dims) total += d;
  return total;
}

void QuiverRep::check_valid() const {
  if (!quiver) throw InputError("representation has no quiver");
  if (dims.size() != quiver->vertex_count())
    throw InputError("dimension vector does not match vertex count");
  if (mats.size() != quiver->arrow_count())
    throw InputError("matrix list does not match arrow count");
  for (std::size_t a = 0; a < mats.size(); ++a) {
    const Arrow& arrow = quiver->arrow(a);
    if (mats[a].rows() != dims[arrow.dst] || mats[a].cols() != dims[arrow.src])
      throw InputError("matrix shape mismatch at arrow '" + arrow.name + "'");
    if (mats[a].field() != field) throw InputError("matrix field mismatch");
  }
}

std::string QuiverRep::dim_string() const {
  std::string out = "(";
  for (std::size_t v = 0; v < dims.size(); ++v) {
    if (v > 0) out += ',';
    out += std::to_string(dims[v]);
  }
  return out + ")";
}

void require_compatible(const QuiverRep& x, const QuiverRep& y) {
  if (!x.quiver || !y.quiver || !(*x.quiver == *y.quiver))
    throw InputError("representations live over different quivers");
  if (x.field != y.field) throw InputError("representations live over different fields");
}

bool same_dims(const QuiverRep& x, const QuiverRep& y) { return x.dims == y.dims; }

bool dims_fit_inside(const QuiverRep& x, const QuiverRep& y) {
  for (std::size_t v = 0; v < x.dims.size(); ++v)
    if (x.dims[v] > y.dims[v]) return false;
  return true;
}

QuiverRep simple_rep(std::shared_ptr<const Quiver> quiver, PrimeField field,
                     std::size_t vertex) {
  std::vector<std::size_t> dims(quiver->vertex_count(), 0);
  dims.at(vertex) = 1;
  return QuiverRep::zero(std::move(quiver), field, std::move(dims));
}

QuiverRep direct_sum(const std::vector<QuiverRep>& parts) {
  if (parts.empty()) throw InputError("direct sum of an empty family");
  for (std::size_t i = 1; i < parts.size(); ++i) require_compatible(parts[0], parts[i]);
  const Quiver& q = *parts[0].quiver;
  std::vector<std::size_t> dims(q.vertex_count(), 0);
  for (const QuiverRep& part : parts)
    for (std::size_t v = 0; v < dims.size(); ++v) dims[v] += part.dims[v];
  QuiverRep out = QuiverRep::zero(parts[0].quiver, parts[0].field, std::move(dims));
  std::vector<std::size_t> offset(q.vertex_count(), 0);
  for (const QuiverRep& part : parts) {
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
      const Arrow& arrow = q.arrow(a);
      for (std::size_t r = 0; r < part.mats[a].rows(); ++r)
        for (std::size_t c = 0; c < part.mats[a].cols(); ++c)
          out.mats[a](offset[arrow.dst] + r, offset[arrow.src] + c) = part.mats[a](r, c);
    }
    for (std::size_t v = 0; v < q.vertex_count(); ++v) offset[v] += part.dims[v];
  }
  return out;
}

bool RepMorphism::intertwines() const {
  const Quiver& q = *source.quiver;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arrow = q.arrow(a);
    if (!(comps[arrow.dst].mul(source.mats[a]) == target.mats[a].mul(comps[arrow.src])))
      return false;
  }
  return true;
}

bool RepMorphism::is_mono() const {
  for (const FpMat& c : comps)
    if (!c.full_column_rank()) return false;
  return true;
}

bool RepMorphism::is_iso() const {
  for (std::size_t v = 0; v < comps.size(); ++v)
    if (comps[v].rows() != comps[v].cols() || !comps[v].full_column_rank()) return false;
  return true;
}

bool RepMorphism::is_zero() const {
  for (const FpMat& c : comps)
    if (!c.is_zero()) return false;
  return true;
}

RepMorphism identity_morphism(const QuiverRep& x) {
  RepMorphism m;
  m.source = x;
  m.target = x;
  for (std::size_t d : x.dims) m.comps.push_back(FpMat::identity(d, x.field));
  return m;
}

namespace {

struct RawRep {
  std::string name;
  std::map<std::size_t, std::size_t> dims;               // vertex -> dim
  std::map<std::size_t, std::vector<long long>> entries;  // arrow -> row-major
};

}  // namespace

QuiverFile load_quiver(std::istream& in, PrimeField field) {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::vector<RawRep> raw_reps;

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string directive;
    if (!(ls >> directive)) continue;
    auto fail = [&](const std::string& msg) {
      throw InputError("quiver file line " + std::to_string(lineno) + ": " + msg);
    };
    auto vertex_index = [&](const std::string& name) -> std::size_t {
      for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == name) return i;
      fail("unknown vertex '" + name + "'");
      return 0;
    };
    if (directive == "v") {
      std::string name;
      if (!(ls >> name)) fail("expected 'v <name>'");
      for (const std::string& existing : vertices)
        if (existing == name) fail("duplicate vertex '" + name + "'");
      vertices.push_back(name);
    } else if (directive == "a") {
      std::string name, src, dst;
      if (!(ls >> name >> src >> dst)) fail("expected 'a <name> <src> <dst>'");
      for (const Arrow& existing : arrows)
        if (existing.name == name) fail("duplicate arrow '" + name + "'");
      arrows.push_back(Arrow{name, vertex_index(src), vertex_index(dst)});
    } else if (directive == "rep") {
      std::string name;
      if (!(ls >> name)) fail("expected 'rep <name>'");
      for (const RawRep& existing : raw_reps)
        if (existing.name == name) fail("duplicate representation '" + name + "'");
      raw_reps.push_back(RawRep{name, {}, {}});
    } else if (directive == "dim") {
      if (raw_reps.empty()) fail("'dim' outside a representation block");
      std::string vertex;
      long long d = -1;
      if (!(ls >> vertex >> d) || d < 0) fail("expected 'dim <vertex> <n>'");
      raw_reps.back().dims[vertex_index(vertex)] = static_cast<std::size_t>(d);
    } else if (directive == "mat") {
      if (raw_reps.empty()) fail("'mat' outside a representation block");
      std::string arrow_name;
      if (!(ls >> arrow_name)) fail("expected 'mat <arrow> <entries...>'");
      std::size_t ai = arrows.size();
      for (std::size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].name == arrow_name) ai = i;
      if (ai == arrows.size()) fail("unknown arrow '" + arrow_name + "'");
      std::vector<long long> entries;
      long long e = 0;
      while (ls >> e) entries.push_back(e);
      ls.clear();
      raw_reps.back().entries[ai] = std::move(entries);
    } else {
      fail("unknown directive '" + directive + "'");
    }
    if (directive != "mat") {
      std::string extra;
      if (ls >> extra) fail("trailing tokens");
    }
  }

  QuiverFile out;
  out.quiver = std::make_shared<const Quiver>(std::move(vertices), std::move(arrows));
  for (const RawRep& raw : raw_reps) {
    std::vector<std::size_t> dims(out.quiver->vertex_count(), 0);
    for (const auto& [v, d] : raw.dims) dims[v] = d;
    QuiverRep rep = QuiverRep::zero(out.quiver, field, std::move(dims));
    for (const auto& [ai, entries] : raw.entries) {
      FpMat& m = rep.mats[ai];
      if (entries.size() != m.rows() * m.cols())
        throw InputError("representation '" + raw.name + "': matrix for arrow '" +
                         out.quiver->arrow(ai).name + "' needs " +
                         std::to_string(m.rows() * m.cols()) + " entries, got " +
                         std::to_string(entries.size()));
      std::uint32_t p = field.p();
      for (std::size_t i = 0; i < entries.size(); ++i) {
        long long v = entries[i] % static_cast<long long>(p);
        if (v < 0) v += p;
        m(i / m.cols(), i % m.cols()) = static_cast<std::uint32_t>(v);
      }
    }
    out.rep_names.push_back(raw.name);
    out.reps.push_back(std::move(rep));
  }
  return out;
}

QuiverFile load_quiver_file(const std::string& path, PrimeField field) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open quiver file '" + path + "'");
  return load_quiver(in, field);
}

}  // namespace grm
