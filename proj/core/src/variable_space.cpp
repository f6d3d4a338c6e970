#include "conslaw/variable_space.hpp"

#include <stdexcept>

namespace conslaw {

std::shared_ptr<const VariableSpace> VariableSpace::make(
    std::vector<MatrixShape> shapes, bool with_velocity, TimeVar time) {
    auto sp = std::make_shared<VariableSpace>();
    sp->shapes_ = std::move(shapes);
    sp->time_ = time;
    sp->with_velocity_ = with_velocity;

    if (time != TimeVar::None) {
        sp->names_.push_back(time == TimeVar::Time ? "t" : "s");
        sp->kinds_.push_back(time == TimeVar::Time ? VarKind::Time
                                                   : VarKind::TimeSurrogate);
    }
    sp->param_base_ = sp->names_.size();

    for (const auto& m : sp->shapes_) {
        if (m.rows < 1 || m.cols < 1)
            throw std::invalid_argument("matrix shape must be positive");
        sp->offsets_.push_back(sp->param_count_);
        sp->param_count_ += static_cast<std::size_t>(m.rows) * m.cols;
    }
    for (const auto& m : sp->shapes_)
        for (int c = 0; c < m.cols; ++c)
            for (int r = 0; r < m.rows; ++r) {
                sp->names_.push_back(m.name + "_" + std::to_string(r + 1) +
                                     "_" + std::to_string(c + 1));
                sp->kinds_.push_back(VarKind::Parameter);
            }
    if (with_velocity) {
        sp->velocity_base_ = sp->names_.size();
        for (const auto& m : sp->shapes_)
            for (int c = 0; c < m.cols; ++c)
                for (int r = 0; r < m.rows; ++r) {
                    sp->names_.push_back("d" + m.name + "_" + std::to_string(r + 1) +
                                         "_" + std::to_string(c + 1));
                    sp->kinds_.push_back(VarKind::Velocity);
                }
    }
    return sp;
}

std::size_t VariableSpace::param_var(std::size_t mat, int row, int col) const {
    const auto& m = shapes_.at(mat);
    if (row < 0 || row >= m.rows || col < 0 || col >= m.cols)
        throw std::out_of_range("matrix entry out of range");
    return param_base_ + offsets_[mat] +
           static_cast<std::size_t>(col) * m.rows + row;
}

std::size_t VariableSpace::velocity_var(std::size_t mat, int row, int col) const {
    if (!with_velocity_) throw std::logic_error("space has no velocity block");
    return param_var(mat, row, col) - param_base_ + velocity_base_;
}

} // namespace conslaw
