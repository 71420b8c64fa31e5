package com.example.app;

import java.lang.Math;
import util.helpers.*;

public class Imports {
    int x;
}
