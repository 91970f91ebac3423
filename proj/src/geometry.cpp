#include "covertbeam/geometry.hpp"

#include <cmath>

namespace covertbeam {

namespace {

double planar_distance(PlanarPoint a, PlanarPoint b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

}  // namespace

void NodeLayout::validate() const {
  if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
  const PlanarPoint origin{0.0, 0.0};
  if (planar_distance(bob, origin) <= 0.0)
    throw DegenerateGeometryError("bob coincides with alice");
  if (planar_distance(willie, origin) <= 0.0)
    throw DegenerateGeometryError("willie coincides with alice");
  if (planar_distance(jammer, bob) <= 0.0)
    throw DegenerateGeometryError("jammer coincides with bob");
  if (planar_distance(jammer, willie) <= 0.0)
    throw DegenerateGeometryError("jammer coincides with willie");
}

PlanarPoint NodeLayout::position(NodeId node) const {
  switch (node) {
    case NodeId::jammer: return jammer;
    case NodeId::bob: return bob;
    case NodeId::willie: return willie;
  }
  throw std::logic_error("unknown node");
}

double NodeLayout::distance_from_alice(NodeId node) const {
  return planar_distance(position(node), PlanarPoint{0.0, 0.0});
}

double NodeLayout::distance_from_jammer(NodeId node) const {
  return planar_distance(position(node), jammer);
}

double NodeLayout::path_loss_from_alice(NodeId node) const {
  return std::pow(distance_from_alice(node), -alpha);
}

double NodeLayout::path_loss_from_jammer(NodeId node) const {
  return std::pow(distance_from_jammer(node), -alpha);
}

NodeAngles NodeLayout::node_angles(NodeId node) const {
  if (node == NodeId::jammer)
    throw std::invalid_argument("node_angles: only bob and willie face the antenna");
  const PlanarPoint p = position(node);
  const double d = std::hypot(p.x, p.y);
  if (!(d > 1e-12)) throw DegenerateGeometryError("node coincides with alice");
  const double dz = (node == NodeId::bob) ? dz_bob : dz_willie;
  return NodeAngles{std::atan2(p.y, p.x), std::atan2(dz, d)};
}

}  // namespace covertbeam
