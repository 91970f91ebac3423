#pragma once

#include <stdexcept>

namespace covertbeam {

struct PlanarPoint {
  double x = 0.0;
  double y = 0.0;
};

enum class NodeId { jammer, bob, willie };

// Direction of a node as seen from the transmitter at the origin.
struct NodeAngles {
  double theta = 0.0;  // horizontal angle, radians
  double phi = 0.0;    // elevation angle, radians
};

struct DegenerateGeometryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Node geometry. The transmitter (Alice) sits at the origin; all distances
// used for path loss are planar. Height differences enter only through the
// elevation angles of the antenna pattern.
struct NodeLayout {
  PlanarPoint jammer{0.0, -10.0};
  PlanarPoint bob{10.0, 0.0};
  PlanarPoint willie{8.0, 0.0};
  double dz_bob = 7.5;     // height difference Alice -> Bob, meters
  double dz_willie = 7.5;  // height difference Alice -> Willie, meters
  double alpha = 4.0;      // path-loss exponent

  void validate() const;

  PlanarPoint position(NodeId node) const;
  double distance_from_alice(NodeId node) const;
  double distance_from_jammer(NodeId node) const;
  double path_loss_from_alice(NodeId node) const;  // d^-alpha
  double path_loss_from_jammer(NodeId node) const;

  // Angles from Alice to Bob or Willie. phi = atan(dz / planar distance).
  // Throws DegenerateGeometryError if the node coincides with Alice.
  NodeAngles node_angles(NodeId node) const;
};

}  // namespace covertbeam
