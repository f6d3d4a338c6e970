#ifndef CONSLAW_VARIABLE_SPACE_HPP
#define CONSLAW_VARIABLE_SPACE_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace conslaw {

enum class VarKind { Time, TimeSurrogate, Parameter, Velocity };

struct MatrixShape {
    std::string name;
    int rows = 0;
    int cols = 0;
};

// Ordered, named coordinates of the (lifted) parameter space.
// Ordering: [time-like] vec(U_1)..vec(U_q) [vec(U'_1)..vec(U'_q)],
// column-major within each matrix.
class VariableSpace {
public:
    enum class TimeVar { None, Time, Surrogate };

    static std::shared_ptr<const VariableSpace> make(
        std::vector<MatrixShape> shapes, bool with_velocity, TimeVar time);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    VarKind kind(std::size_t i) const { return kinds_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<MatrixShape>& shapes() const { return shapes_; }

    bool has_time() const { return time_ != TimeVar::None; }
    bool has_velocity() const { return with_velocity_; }

    // Total parameter count D.
    std::size_t param_count() const { return param_count_; }
    // Global index of the i-th parameter coordinate, 0 <= i < D.
    std::size_t param_var(std::size_t i) const { return param_base_ + i; }
    std::size_t velocity_var(std::size_t i) const { return velocity_base_ + i; }
    // Global index for entry (row, col) of weight matrix `mat` (column-major).
    std::size_t param_var(std::size_t mat, int row, int col) const;
    std::size_t velocity_var(std::size_t mat, int row, int col) const;

    // Offset of matrix `mat` within the parameter block.
    std::size_t block_offset(std::size_t mat) const { return offsets_[mat]; }

private:
    std::vector<std::string> names_;
    std::vector<VarKind> kinds_;
    std::vector<MatrixShape> shapes_;
    std::vector<std::size_t> offsets_;
    TimeVar time_ = TimeVar::None;
    bool with_velocity_ = false;
    std::size_t param_count_ = 0;
    std::size_t param_base_ = 0;
    std::size_t velocity_base_ = 0;
};

using SpacePtr = std::shared_ptr<const VariableSpace>;

} // namespace conslaw

#endif
