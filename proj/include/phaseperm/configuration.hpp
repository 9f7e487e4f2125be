/*
 * Copyright 2026 The phaseperm Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <vector>

namespace phaseperm {

/// Occupation numbers T_1..T_m of an output Fock state.
class PhotonConfiguration {
  public:
    PhotonConfiguration() = default;
    explicit PhotonConfiguration(std::vector<unsigned> occupations)
        : occupations_(std::move(occupations)) {}

    [[nodiscard]] std::size_t modes() const noexcept { return occupations_.size(); }
    [[nodiscard]] unsigned total() const noexcept {
        return std::accumulate(occupations_.begin(), occupations_.end(), 0u);
    }
    unsigned operator[](std::size_t k) const noexcept { return occupations_[k]; }
    [[nodiscard]] std::span<const unsigned> occupations() const noexcept { return occupations_; }

    /// "1 0 2"
    [[nodiscard]] std::string to_string() const {
        std::string s;
        for (std::size_t k = 0; k < occupations_.size(); ++k) {
            if (k)
                s += ' ';
            s += std::to_string(occupations_[k]);
        }
        return s;
    }

    friend auto operator<=>(const PhotonConfiguration &, const PhotonConfiguration &) = default;

  private:
    std::vector<unsigned> occupations_;
};

} // namespace phaseperm
