#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "qeur/errors.hpp"

namespace qeur {

/// Ordered, labeled tensor-product structure. Label index 0 is the leftmost
/// factor and the most significant digit of the computational-basis index.
class SystemLayout {
 public:
  SystemLayout(std::vector<std::string> labels, std::vector<std::size_t> dims)
      : labels_(std::move(labels)), dims_(std::move(dims)) {
    if (labels_.size() != dims_.size()) {
      throw DimensionMismatch("layout label and dimension counts differ");
    }
    if (labels_.empty()) {
      throw DomainError("layout requires at least one subsystem");
    }
    total_dim_ = 1;
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (dims_[i] < 2) {
        throw DomainError("subsystem dimension must be at least 2");
      }
      for (std::size_t j = i + 1; j < labels_.size(); ++j) {
        if (labels_[i] == labels_[j]) {
          throw DomainError("duplicate subsystem label \"" + labels_[i] +
                            "\"");
        }
      }
      total_dim_ *= dims_[i];
    }
  }

  static SystemLayout qubits(std::vector<std::string> labels) {
    std::vector<std::size_t> dims(labels.size(), 2);
    return SystemLayout(std::move(labels), std::move(dims));
  }

  std::size_t count() const { return labels_.size(); }
  std::size_t total_dim() const { return total_dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t dim_of(const std::string& label) const {
    return dims_[index_of(label)];
  }

  std::size_t index_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (labels_[i] == label) {
        return i;
      }
    }
    throw UnknownLabel("unknown subsystem label \"" + label + "\"");
  }

  bool contains(const std::string& label) const {
    return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
  }

  /// Sub-layout of the given labels, kept in this layout's order.
  SystemLayout restricted(const std::vector<std::string>& keep) const {
    std::vector<std::string> labels;
    std::vector<std::size_t> dims;
    for (const std::string& l : keep) {
      index_of(l);
    }
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (std::find(keep.begin(), keep.end(), labels_[i]) != keep.end()) {
        labels.push_back(labels_[i]);
        dims.push_back(dims_[i]);
      }
    }
    return SystemLayout(std::move(labels), std::move(dims));
  }

  bool operator==(const SystemLayout& other) const {
    return labels_ == other.labels_ && dims_ == other.dims_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<std::size_t> dims_;
  std::size_t total_dim_ = 1;
};

}  // namespace qeur
