#pragma once

#include "hexlet/common.hpp"
#include "hexlet/inversive.hpp"
#include "hexlet/canonicalize.hpp"
#include "hexlet/locus.hpp"
#include "hexlet/codes.hpp"
#include "hexlet/correspondence.hpp"
#include "hexlet/steiner.hpp"
