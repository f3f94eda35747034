// Copyright 2026 The qfivol Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef QFIVOL_QFIVOL_HPP
#define QFIVOL_QFIVOL_HPP

#include "qfivol/types.hpp"
#include "qfivol/omf.hpp"
#include "qfivol/spectral.hpp"
#include "qfivol/means.hpp"
#include "qfivol/qig.hpp"
#include "qfivol/random.hpp"
#include "qfivol/volumes.hpp"
#include "qfivol/oracle.hpp"
#include "qfivol/campaign.hpp"
#include "qfivol/report.hpp"

#endif  // QFIVOL_QFIVOL_HPP
