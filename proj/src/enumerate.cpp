#include "gcg/enumerate.hpp"

#include <optional>

namespace gcg {

namespace {

// Builds canonical port tables directly: vertices are completed in index
// order and ports in alphabet order, and a new vertex always takes the next
// index. The decisions made are exactly those the canonical breadth-first
// numbering would replay, so every table appears once and no deduplication
// is needed.
class Generator {
 public:
  Generator(AlphabetPtr alphabet, std::optional<unsigned> radius, std::size_t max_vertices, const GcgVisitor& visit)
      : alphabet_(std::move(alphabet)),
        radius_(radius),
        max_vertices_(max_vertices),
        visit_(visit),
        table_(alphabet_->port_count()) {}

  std::size_t run() {
    if (max_vertices_ == 0) return 0;
    table_.add_vertex();
    dist_.push_back(0);
    extend(0, 0);
    return count_;
  }

 private:
  bool inner(VertexId v) const { return !radius_ || dist_[v] <= *radius_; }

  void extend(VertexId v, Port p) {
    const std::size_t k = table_.ports;
    for (;;) {
      if (stop_) return;
      if (v >= table_.size() || !inner(v)) {
        label_vertices(0);
        return;
      }
      if (p >= k) {
        ++v;
        p = 0;
        continue;
      }
      if (!table_.at(v, p).free()) {
        ++p;
        continue;
      }
      break;
    }

    extend(v, static_cast<Port>(p + 1));

    if (table_.size() < max_vertices_) {
      const VertexId w = static_cast<VertexId>(table_.size());
      table_.add_vertex();
      dist_.push_back(dist_[v] + 1);
      for (Port q = 0; q < k && !stop_; ++q) {
        table_.connect(v, p, w, q);
        extend(v, static_cast<Port>(p + 1));
        disconnect(v, p);
      }
      table_.labels.pop_back();
      table_.slots.resize(table_.slots.size() - k);
      dist_.pop_back();
    }

    for (VertexId w = v; w < table_.size() && !stop_; ++w) {
      for (Port q = (w == v ? p + 1 : 0); q < k && !stop_; ++q) {
        if (!table_.at(w, q).free()) continue;
        table_.connect(v, p, w, q);
        extend(v, static_cast<Port>(p + 1));
        disconnect(v, p);
      }
    }
  }

  void disconnect(VertexId v, Port p) {
    HalfEdge& h = table_.at(v, p);
    table_.at(h.target, h.port) = HalfEdge{};
    h = HalfEdge{};
  }

  void label_vertices(VertexId v) {
    if (stop_) return;
    if (v == table_.size()) {
      label_edges(0);
      return;
    }
    if (!inner(v) || alphabet_->sigma.empty()) {
      label_vertices(v + 1);
      return;
    }
    table_.labels[v].reset();
    label_vertices(v + 1);
    for (Label l = 0; l < alphabet_->sigma.size() && !stop_; ++l) {
      table_.labels[v] = l;
      label_vertices(v + 1);
    }
    table_.labels[v].reset();
  }

  void label_edges(std::size_t slot) {
    if (stop_) return;
    const std::size_t k = table_.ports;
    // Each edge is labelled from its smaller slot.
    while (slot < table_.slots.size()) {
      const HalfEdge& h = table_.slots[slot];
      const VertexId v = static_cast<VertexId>(slot / k);
      const Port p = static_cast<Port>(slot % k);
      if (!h.free() && std::make_pair(v, p) <= std::make_pair(h.target, h.port) && inner(v) && inner(h.target) &&
          !alphabet_->delta.empty())
        break;
      ++slot;
    }
    if (slot == table_.slots.size()) {
      emit();
      return;
    }
    HalfEdge& h = table_.slots[slot];
    HalfEdge& back = table_.at(h.target, h.port);
    label_edges(slot + 1);
    for (Label l = 0; l < alphabet_->delta.size() && !stop_; ++l) {
      h.label = back.label = l;
      label_edges(slot + 1);
    }
    h.label.reset();
    back.label.reset();
  }

  void emit() {
    ++count_;
    if (!visit_(canonical_form(alphabet_, table_, 0, radius_).graph)) stop_ = true;
  }

  AlphabetPtr alphabet_;
  std::optional<unsigned> radius_;
  std::size_t max_vertices_;
  const GcgVisitor& visit_;
  PortTable table_;
  std::vector<unsigned> dist_;
  std::size_t count_ = 0;
  bool stop_ = false;
};

}  // namespace

std::size_t for_each_disk(const AlphabetPtr& alphabet, unsigned n, const GcgVisitor& visit,
                          std::size_t max_vertices) {
  return Generator(alphabet, n, max_vertices, visit).run();
}

std::vector<Gcg> enumerate_disks(const AlphabetPtr& alphabet, unsigned n) {
  std::vector<Gcg> out;
  for_each_disk(alphabet, n, [&out](const Gcg& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

std::size_t for_each_graph(const AlphabetPtr& alphabet, std::size_t max_vertices, const GcgVisitor& visit) {
  return Generator(alphabet, std::nullopt, max_vertices, visit).run();
}

std::vector<Gcg> enumerate_graphs(const AlphabetPtr& alphabet, std::size_t max_vertices) {
  std::vector<Gcg> out;
  for_each_graph(alphabet, max_vertices, [&out](const Gcg& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

}  // namespace gcg
