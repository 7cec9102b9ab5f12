#pragma once

#include <stdexcept>
#include <string>

namespace plforest {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input file or directory does not match the expected layout.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Pixel or patch coordinates outside the image.
class BoundsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidDepthError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Empty sample sets, frames with no valid depth, views with no geometry.
class EmptyInputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Collinear/ill-conditioned point configurations and singular covariances.
class DegenerateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InsufficientPointsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Loaded pose matrix is not a rigid transform.
class PoseValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class TrainingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RelocalizationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Non-finite objective at the start of a refinement.
class InvalidStartError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace plforest
