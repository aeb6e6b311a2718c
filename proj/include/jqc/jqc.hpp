#pragma once

#include "jqc/census.hpp"
#include "jqc/curves.hpp"
#include "jqc/error.hpp"
#include "jqc/field.hpp"
#include "jqc/io.hpp"
#include "jqc/parse.hpp"
#include "jqc/transforms.hpp"
