#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "ggcn/errors.hpp"

namespace ggcn {

class Tensor;
using TensorPtr = std::shared_ptr<Tensor>;

/// Dense row-major tensor of 64-bit floats. Gradients live in a same-shape
/// buffer that is allocated only when requires_grad is set.
class Tensor {
  public:
    Tensor() = default;
    explicit Tensor(std::vector<std::size_t> shape, bool requires_grad = false);
    Tensor(std::vector<std::size_t> shape, std::vector<double> data, bool requires_grad = false);

    static TensorPtr zeros(std::vector<std::size_t> shape, bool requires_grad = false);
    static TensorPtr full(std::vector<std::size_t> shape, double value, bool requires_grad = false);
    static TensorPtr from(std::vector<std::size_t> shape, std::vector<double> data,
                          bool requires_grad = false);

    const std::vector<std::size_t>& shape() const { return shape_; }
    std::size_t rank() const { return shape_.size(); }
    std::size_t size() const { return data_.size(); }
    std::size_t dim(std::size_t i) const { return shape_[i]; }

    std::vector<double>& values() { return data_; }
    const std::vector<double>& values() const { return data_; }
    double& at(std::size_t i) { return data_[i]; }
    double at(std::size_t i) const { return data_[i]; }
    /// Rank-2 accessor, row-major.
    double& at2(std::size_t r, std::size_t c) { return data_[r * shape_[1] + c]; }
    double at2(std::size_t r, std::size_t c) const { return data_[r * shape_[1] + c]; }

    bool requires_grad() const { return requires_grad_; }
    void set_requires_grad(bool value);

    /// Gradient accumulator; only valid when requires_grad is set.
    std::vector<double>& grad();
    const std::vector<double>& grad() const;
    bool has_grad() const { return !grad_.empty(); }
    void zero_grad();
    void accumulate_grad(std::span<const double> g);

    std::string shape_string() const;

  private:
    std::vector<std::size_t> shape_;
    std::vector<double> data_;
    std::vector<double> grad_;
    bool requires_grad_ = false;
};

std::size_t shape_product(std::span<const std::size_t> shape);

/// Reverse-mode tape. Operations append their backward rule in execution
/// order, which is a topological order by construction; backward() replays
/// the rules once, in reverse.
///
/// Leaf gradients (tensors not produced by any recorded op) accumulate
/// across backward() calls; intermediate gradients are reset per call, so
/// calling backward twice exactly doubles every leaf gradient.
///
/// A tape is confined to one thread for a forward/backward episode.
class Tape {
  public:
    Tape() = default;
    explicit Tape(bool enabled) : enabled_(enabled) {}

    bool enabled() const { return enabled_; }
    void set_enabled(bool value) { enabled_ = value; }

    /// Registers `output` as produced by the tape together with its backward
    /// rule. The rule must add into the inputs' grad buffers, reading the
    /// adjoint from output->grad().
    void record(const TensorPtr& output, std::function<void()> rule);

    /// Seeds d(loss)/d(loss) = 1 and replays all rules in reverse order.
    /// `loss` must be a scalar produced by this tape.
    void backward(const TensorPtr& loss);

    bool produced(const Tensor* t) const { return produced_.count(t) != 0; }
    std::size_t num_nodes() const { return rules_.size(); }
    void clear();

  private:
    bool enabled_ = true;
    std::vector<TensorPtr> outputs_;
    std::vector<std::function<void()>> rules_;
    std::unordered_set<const Tensor*> produced_;
};

} // namespace ggcn
