// Copyright 2026 The dmix Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dmix/tensor.h"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "dmix/errors.h"

namespace dmix {
namespace {

TEST(ImageTensorTest, PlanarLayout) {
  ImageTensor t(2, 3, 2, std::vector<double>{0, 1, 2, 3, 4, 5,  //
                                             6, 7, 8, 9, 10, 11});
  EXPECT_EQ(t.at(0, 1, 2), 5);
  EXPECT_EQ(t.at(1, 0, 0), 6);
  EXPECT_EQ(t.plane(1)[4], 10);
  EXPECT_EQ(t.size(), 12u);
}

TEST(ImageTensorTest, RejectsBadConstruction) {
  EXPECT_THROW(ImageTensor(0, 3, 1), DimensionError);
  EXPECT_THROW(ImageTensor(2, 2, 1, std::vector<double>(3)), DimensionError);
  EXPECT_THROW(
      ImageTensor(1, 2, 1,
                  std::vector<double>{0.0, std::numeric_limits<double>::quiet_NaN()}),
      ParameterError);
  EXPECT_THROW(ImageTensor(1, 1, 1, std::numeric_limits<double>::infinity()),
               ParameterError);
}

TEST(ImageTensorTest, ClampBringsValuesIntoRange) {
  ImageTensor t(1, 3, 1, std::vector<double>{-0.5, 0.5, 1.5});
  t.clamp();
  EXPECT_EQ(t.at(0, 0, 0), 0.0);
  EXPECT_EQ(t.at(0, 0, 1), 0.5);
  EXPECT_EQ(t.at(0, 0, 2), 1.0);
}

TEST(SoftLabelTest, Validation) {
  EXPECT_NO_THROW(SoftLabel({0.25, 0.75}));
  EXPECT_NO_THROW(SoftLabel({1.0}));  // K = 1 is the constant simplex
  EXPECT_THROW(SoftLabel({0.5, 0.6}), ValidationError);
  EXPECT_THROW(SoftLabel({1.5, -0.5}), ValidationError);
  EXPECT_THROW(SoftLabel(std::vector<double>{}), ValidationError);
  EXPECT_THROW(SoftLabel::one_hot(5, 5), ValidationError);
  const SoftLabel e2 = SoftLabel::one_hot(2, 4);
  EXPECT_EQ(e2[2], 1.0);
  EXPECT_EQ(e2[0], 0.0);
}

}  // namespace
}  // namespace dmix
