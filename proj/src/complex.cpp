#include "plcw/complex.hpp"

#include <algorithm>
#include <set>

#include "plcw/validate.hpp"

namespace plcw {

std::string to_string(CellId id) { return std::to_string(id.dim) + ":" + std::to_string(id.index); }

int Complex::count(int dim) const {
  if (dim < 0 || dim > dimension()) return 0;
  return static_cast<int>(cells_[dim].size());
}

std::size_t Complex::size() const {
  std::size_t n = 0;
  for (const auto& row : cells_) n += row.size();
  return n;
}

bool Complex::contains(CellId id) const {
  return id.dim >= 0 && id.dim <= dimension() && id.index >= 0 && id.index < count(id.dim);
}

const Cell& Complex::cell(CellId id) const {
  if (!contains(id)) throw Error("unknown cell " + to_string(id));
  return cells_[id.dim][id.index];
}

const Attachment& Complex::attachment(CellId id) const {
  const Cell& c = cell(id);
  if (!c.attachment) throw Error("cell " + name(id) + " is a vertex and has no attachment");
  return *c.attachment;
}

std::optional<CellId> Complex::find(std::string_view label) const {
  auto it = labels_.find(std::string(label));
  if (it == labels_.end()) return std::nullopt;
  return it->second;
}

std::string Complex::name(CellId id) const {
  if (contains(id) && !cells_[id.dim][id.index].label.empty()) return cells_[id.dim][id.index].label;
  return to_string(id);
}

std::vector<CellId> Complex::cells() const {
  std::vector<CellId> out;
  out.reserve(size());
  for (int d = 0; d <= dimension(); ++d)
    for (int i = 0; i < count(d); ++i) out.push_back({d, i});
  return out;
}

FVector Complex::f_vector() const {
  FVector f;
  for (const auto& row : cells_) f.push_back(static_cast<std::int64_t>(row.size()));
  return f;
}

std::int64_t Complex::euler_characteristic() const {
  std::int64_t chi = 0;
  for (int d = 0; d <= dimension(); ++d) chi += (d % 2 == 0 ? 1 : -1) * count(d);
  return chi;
}

CellId Complex::add_vertex(std::string label) { return append(0, nullptr, std::move(label)); }

CellId Complex::add_cell(Attachment att, std::string label) {
  auto report = check_attachment(*this, att);
  if (!report.ok()) throw Error("invalid attachment: " + report.summary());
  const int dim = att.sphere.model.dimension() + 1;
  return append(dim, std::make_shared<const Attachment>(std::move(att)), std::move(label));
}

CellId Complex::append(int dim, std::shared_ptr<const Attachment> att, std::string label) {
  if (dim < 0) throw Error("negative cell dimension");
  if ((dim == 0) != (att == nullptr)) throw Error("a cell has an attachment iff its dimension is positive");
  if (!label.empty() && labels_.count(label)) throw Error("duplicate label '" + label + "'");
  if (static_cast<int>(cells_.size()) <= dim) cells_.resize(dim + 1);
  CellId id{dim, static_cast<int>(cells_[dim].size())};
  if (!label.empty()) labels_.emplace(label, id);
  cells_[dim].push_back(Cell{std::move(label), std::move(att)});
  return id;
}

void Complex::set_label(CellId id, std::string label) {
  Cell& c = const_cast<Cell&>(cell(id));
  if (c.label == label) return;
  if (!label.empty() && labels_.count(label)) throw Error("duplicate label '" + label + "'");
  if (!c.label.empty()) labels_.erase(c.label);
  if (!label.empty()) labels_.emplace(label, id);
  c.label = std::move(label);
}

bool Complex::operator==(const Complex& other) const {
  if (cells_.size() != other.cells_.size()) return false;
  for (std::size_t d = 0; d < cells_.size(); ++d) {
    if (cells_[d].size() != other.cells_[d].size()) return false;
    for (std::size_t i = 0; i < cells_[d].size(); ++i) {
      const Cell& a = cells_[d][i];
      const Cell& b = other.cells_[d][i];
      if (a.label != b.label) return false;
      if (a.attachment == b.attachment) continue;
      if (!a.attachment || !b.attachment || !(*a.attachment == *b.attachment)) return false;
    }
  }
  return true;
}

const SphereData& pullback(const Complex& k, CellId c) {
  if (!k.contains(c)) throw Error("unknown cell " + to_string(c));
  if (c.dim == 0) throw Error("pullback of a vertex: cell " + k.name(c) + " has no boundary sphere");
  return k.attachment(c).sphere;
}

Complex skeleton(const Complex& k, int dim) {
  if (dim < 0 || dim > k.dimension())
    throw Error("skeleton dimension " + std::to_string(dim) + " out of range [0, " +
                std::to_string(k.dimension()) + "]");
  Complex out;
  for (int d = 0; d <= dim; ++d)
    for (int i = 0; i < k.count(d); ++i) {
      const Cell& c = k.cell({d, i});
      out.append(d, c.attachment, c.label);
    }
  return out;
}

std::vector<CellId> faces(const Complex& k, CellId c) {
  k.cell(c);
  std::set<CellId> out;
  if (c.dim > 0) {
    const Attachment& att = k.attachment(c);
    for (int d = 0; d < c.dim; ++d)
      for (int target : att.map.assign[d]) out.insert({d, target});
  }
  return {out.begin(), out.end()};
}

std::vector<CellId> cofaces(const Complex& k, CellId c) {
  k.cell(c);
  std::vector<CellId> out;
  for (int d = c.dim + 1; d <= k.dimension(); ++d)
    for (int i = 0; i < k.count(d); ++i) {
      const auto& assigned = k.attachment({d, i}).map.assign[c.dim];
      if (std::find(assigned.begin(), assigned.end(), c.index) != assigned.end()) out.push_back({d, i});
    }
  return out;
}

}  // namespace plcw
