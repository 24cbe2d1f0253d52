extern void print_int(int v);

int g0 = 7;
int g1 = 0;
int g2 = 8;
int a[8] = {8, 7, 0, 4, 1, 3, 7, 5};

void bump(int d)
{
    g0 = g0 + d;
}

int h0(int u, int v)
{
    int t;
    t = ((g1 == 4) ^ g2 | 1);
    if (t > 13) {
        return t - a[g1 & 7];
    }
    return t + v;
}

int h1(int u, int v)
{
    int t;
    t = g2;
    if (t > 14) {
        return t - g2;
    }
    return t + v;
}

int h2(int u, int v)
{
    int t;
    t = (u & g1 & 2);
    if (t > 4) {
        return t - a[g1 & 7];
    }
    return t + v;
}

int main(void)
{
    int x0, x1, x2, x3;
    int i0, i1, i2;
    x0 = 5;
    x1 = 4;
    x2 = 2;
    x3 = 9;
    i0 = 0;
    do {
        switch ((3 < 5) & 3) {
        case 0:
            x1++;
            g1 = 1;
        case 1:
            print_int(8 & a[x0 & 7]);
        case 2:
            g1 = (a[x1 & 7] + a[g1 & 7] | 4);
        default:
            a[a[x0 & 7] & 7] = 1 + g2;
        }
        i0++;
    } while (i0 < 2);
    x0 = (g0 ^ 8);
    for (i0 = 0; i0 < 0; i0++) {
        g2 = a[x0 & 7];
        x1 = (g0 ^ x0 == g1);
        g0 = (g0 ^ x3 < (a[g0 & 7] == g0));
    }
    g2 = (a[g2 & 7] & a[g2 & 7] + a[g0 & 7]);
    x1 = (7 - x1 % (1 + ((x0) & 3)));
    if (x1 ^ g1 == 4) {
        x0 = h2(x1, a[x1 & 7] | g1);
        if (9 * a[x1 & 7] == 7) {
            i0 = 0;
            while (i0 < 0) {
                x2 = 0;
                g1 = (x3 ^ g0 & 9 / (1 + ((x1) & 3)));
                i0++;
            }
        }
    } else {
        x0 = 0;
    }
    a[x3 & 7] = (9 < 7);
    print_int((x1 == g0));
    a[5 & 7] = 1 & a[g1 & 7];
    x1 = h1(x0 - a[g1 & 7], 5 - 3);
    switch (x0 - 2 & 3) {
    case 0:
        g2 = (8 & a[x2 & 7] * 0 % (1 + ((1) & 3)));
    case 1:
        a[0 & 7] = x2;
        break;
    default:
        bump(a[x0 & 7] & x0);
    }
    x1 = h2(2 ^ x1, x1);
    a[g0 & 7] = 8 | x3;
    x1 = (1 < a[x1 & 7]) / (1 + ((6 & a[x2 & 7]) & 3));
    i0 = 0;
    do {
        switch (a[g2 & 7] & 3) {
        case 0:
            x0++;
            break;
        default:
            g1 = (x0 & 3 / (1 + ((a[x3 & 7]) & 3)));
        }
        print_int(a[x2 & 7]);
        i0++;
    } while (i0 < 2);
    a[2 & 7] = a[x2 & 7];
    g0 = 6;
    for (i0 = 0; i0 < 0; i0++) {
        g2 = (x1 % (1 + ((x0) & 3)) | x0);
        x3++;
        switch (x0 + x2 & 3) {
        case 0:
            x1 = (x1 - 0 & x1 / (1 + ((6) & 3)));
        case 1:
            print_int(a[g2 & 7] & 9);
            break;
        case 2:
            bump(x2);
            break;
        default:
            print_int(a[g0 & 7] * x2);
        }
    }
    switch (1 | x3 & 3) {
    case 0:
        x1 = (x3 % (1 + ((x3) & 3)) < g0 % (1 + ((a[x3 & 7]) & 3)));
        break;
    default:
        x1 = ((4 == a[g0 & 7]) - 1);
    }
    x2 = 8;
    switch (x1 * 0 & 3) {
    case 0:
        bump(g1);
        x2 = a[x2 & 7];
        break;
    case 1:
        x1++;
        break;
    default:
        x1 = a[g0 & 7];
    }
    g2 = (g1 == g0 - a[g0 & 7]);
    x1--;
    print_int((a[g1 & 7] < 0));
    print_int(x2 - g1);
    x2 = a[g0 & 7] % (1 + ((g0) & 3));
    x2--;
    x3 = ((4 == x3) & 2 % (1 + ((g2) & 3)));
    print_int(9 + a[x3 & 7]);
    g2 = 3;
    x3 = 1 - g1 / (1 + ((x2 * g1) & 3));
    switch (a[g2 & 7] - a[x2 & 7] & 3) {
    case 0:
        a[4 & 7] = x2 * g1;
        break;
    default:
        print_int(a[g1 & 7] % (1 + ((a[g0 & 7]) & 3)));
    }
    x0++;
    if ((4 == 3) < 4) {
        print_int(x2);
        a[5 & 7] = 3;
    } else {
        switch (1 % (1 + ((3) & 3)) & 3) {
        case 0:
            x3 = 7;
            break;
        case 1:
            a[5 & 7] = x0;
            break;
        default:
            x1 = 5 % (1 + (((a[x0 & 7] < 2)) & 3));
        }
    }
    i0 = 0;
    do {
        x2 = 1;
        g2 = (0 ^ (5 == a[g0 & 7]));
        if (g1 == 0) break;
        x2--;
        a[4 & 7] = a[x3 & 7];
        x1 = g0;
        i0++;
    } while (i0 < 3);
    print_int(a[x2 & 7] % (1 + ((a[g1 & 7]) & 3)));
    a[x2 & 7] = a[x2 & 7] | 5;
    g0 = ((3 < a[g2 & 7]) - 6 % (1 + ((a[g2 & 7]) & 3)));
    if ((1 < g1) != 4)
        g0 = 3;
    switch ((g1 == x0) & 3) {
    case 0:
        x3 = (x3 * a[g1 & 7] * g2);
        break;
    case 1:
        x0 = g0;
        break;
    default:
        print_int(g0);
    }
    for (i0 = 0; i0 < 1; i0++) {
        if (g2 ^ a[x3 & 7] == 3) continue;
        x3 = (a[x2 & 7] * g2 - 5);
        x1--;
    }
    x3 = x2;
    for (i0 = 0; i0 < 1; i0++) {
        a[g1 & 7] = a[x2 & 7] ^ 0;
    }
    i0 = 0;
    while (i0 < 2) {
        if (a[x0 & 7] == 3) break;
        i0++;
    }
    a[g1 & 7] = g0 & a[x3 & 7];
    bump(g1);
    i0 = 0;
    do {
        i1 = 0;
        do {
            g0 = ((x0 < 7) * 2 ^ a[x3 & 7]);
            i1++;
        } while (i1 < 0);
        i0++;
    } while (i0 < 0);
    if (g0 > 1) {
        g2 = (7 - g2 < (g1 < x2));
        x3 = (x0 * a[g2 & 7] & x2 ^ 9);
        g2 = g1;
    }
    print_int(g1);
    switch (4 & 3) {
    case 0:
        x3++;
        break;
    default:
        x0--;
    }
    i0 = 0;
    do {
        g0 = 5;
        g0 = 5;
        i0++;
    } while (i0 < 2);
    for (i0 = 0; i0 < 0; i0++) {
        bump(a[x3 & 7] - g0);
        i1 = 0;
        do {
            x1 = (0 + a[g1 & 7]);
            i1++;
        } while (i1 < 3);
        print_int(5 + x0);
    }
    x0 = x1;
    x1 = ((2 < x3) * 2 % (1 + ((g0) & 3)));
    x3 = a[x0 & 7];
    i0 = 0;
    while (i0 < 1) {
        if (a[g2 & 7] * a[g0 & 7] != 1) {
            if (6 | g1 == 0) break;
        }
        bump((2 == x1));
        x0++;
        i0++;
    }
    i0 = 0;
    do {
        if (2 > 7) {
            if (9 / (1 + ((5) & 3)) < 6) {
                x0 = (g2 + 6 + g1);
                x1 = h0(g0 | x0, g0);
                g0 = (x0 / (1 + ((x3) & 3)) < a[x1 & 7]);
            } else {
                if (x2 == 2) break;
            }
        }
        i0++;
    } while (i0 < 3);
    a[g1 & 7] = (g0 == a[x0 & 7]);
    a[3 & 7] = x2;
    g1 = (0 & a[x1 & 7] ^ a[g1 & 7] % (1 + ((x0) & 3)));
    x0 = a[x2 & 7];
    a[a[g2 & 7] & 7] = x3;
    x2++;
    g2 = (g1 + a[x0 & 7] ^ (9 < 8));
    g0 = (a[g2 & 7] * 8 - 0 & g1);
    g2 = x0 - x0 / (1 + (((4 == g1)) & 3));
    print_int(1 / (1 + ((x3) & 3)));
    print_int(1);
    if (a[g2 & 7] != 1) {
        if (a[g2 & 7] | x1 != 2) {
            x1--;
            print_int(9 * x2);
            x2 = h0(g1 ^ 3, x0);
            g0 = (a[g0 & 7] + 1 < a[x2 & 7] ^ g0);
        }
    }
    a[x2 & 7] = x0 + a[g1 & 7];
    switch ((g0 < x0) & 3) {
    case 0:
        x0 = h0((0 < x3), x3);
        g1 = (g0 % (1 + ((g2) & 3)) - a[x1 & 7] + a[x3 & 7]);
        break;
    case 1:
        x1 = (x2 + a[x3 & 7] - a[x1 & 7] / (1 + ((x1) & 3)));
        break;
    default:
        x0 = ((x3 < a[x0 & 7]) - a[g1 & 7]);
    }
    x0++;
    if (x3 > 1) {
        for (i0 = 0; i0 < 3; i0++) {
            x0 = h0(x1 - a[x1 & 7], 0 ^ g0);
            x1 = (x2 == x3 % (1 + ((a[x3 & 7]) & 3)));
            switch (a[g2 & 7] | x3 & 3) {
            case 0:
                x1 = h2(a[x1 & 7], a[x2 & 7] * a[x0 & 7]);
                break;
            case 1:
                x0 = (x2 | 2 ^ g0 | a[g1 & 7]);
                break;
            default:
                bump(9 / (1 + ((3) & 3)));
            }
        }
    }
    x3 = (g2 ^ 7 < x2 - g0);
    i0 = 0;
    while (i0 < 1) {
        i1 = 0;
        do {
            x1 = (g0 - 4 == g0 * a[x0 & 7]);
            if (g0 == 1) break;
            i1++;
        } while (i1 < 3);
        x3 = (a[x0 & 7] & (x0 == a[g1 & 7]));
        i0++;
    }
    i0 = 0;
    do {
        print_int((8 < g2));
        i0++;
    } while (i0 < 2);
    x2 = x2;
    g0 = (a[x2 & 7] - 3 | x3);
    switch ((g0 == x0) & 3) {
    case 0:
        x1 = (g1 * x2 == x2);
    case 1:
        a[a[x1 & 7] & 7] = 3 * g0;
        break;
    case 2:
        x2--;
        break;
    default:
        x1 = x1;
    }
    g1 = (x1 - g0 & x3);
    print_int(g0);
    for (i0 = 0; i0 < 2; i0++) {
        i1 = 0;
        do {
            x1 = (g0 + a[g0 & 7] + a[g2 & 7] | 6);
            i1++;
        } while (i1 < 0);
    }
    x1--;
    g0 = (a[g0 & 7] + (1 == x0));
    i0 = 0;
    do {
        x0 = x1;
        i0++;
    } while (i0 < 2);
    g0 = (a[x3 & 7] * x1 * g1);
    x0 = (x2 * g1 * x3 | x0);
    a[x2 & 7] = g0 | x3;
    a[x0 & 7] = g0 | a[g1 & 7];
    switch (a[x3 & 7] & 3) {
    case 0:
        a[6 & 7] = x1;
        break;
    default:
        x0 = a[g2 & 7];
    }
    g1 = a[x1 & 7];
    g1 = 2;
    x0--;
    x3 = (4 / (1 + ((2) & 3)) ^ a[g2 & 7] - g1);
    x2 = x2;
    print_int((g0 < a[x2 & 7]));
    x3 = ((a[g0 & 7] == 7) * x3 * a[g1 & 7]);
    print_int(a[x1 & 7] & g2);
    x3--;
    if (x3 | 9 == 0) {
        for (i0 = 0; i0 < 0; i0++) {
            a[x2 & 7] = g0 + a[g0 & 7];
            if (x3 == 3) continue;
            g2 = x3;
        }
    } else {
        x1 = a[x1 & 7];
        x1 = (x3 * x3);
        print_int((x2 == x2));
    }
    bump(x1);
    if (a[x3 & 7] > 0) {
        x2 = (x3 + a[x1 & 7] / (1 + ((g1) & 3)));
        a[6 & 7] = (x3 < a[x0 & 7]);
        if (a[g2 & 7] != 4)
            x0--;
        print_int(x1 % (1 + ((6) & 3)));
        print_int(a[g1 & 7] * a[g2 & 7]);
    } else {
        a[a[x3 & 7] & 7] = x1 + 1;
        x1 = g1;
        x1 = (a[x3 & 7] < a[x0 & 7] / (1 + ((g2) & 3)));
    }
    x2 = h2((g1 == x3), g0);
    if (x2 == 7) {
        x1 = 3;
        i0 = 0;
        while (i0 < 2) {
            print_int((4 == 6));
            x1++;
            i0++;
        }
    }
    bump(8 | a[g0 & 7]);
    x3 = (a[x0 & 7] - a[x3 & 7] | 2);
    if (6 + x3 == 0) {
        a[x2 & 7] = 2;
    } else {
        print_int(3);
    }
    for (i0 = 0; i0 < 1; i0++) {
        x2 = (x0 * g0 / (1 + ((g2) & 3)));
        x1 = a[g1 & 7];
    }
    if (a[x0 & 7] != 7) {
        switch (g2 & 3) {
        case 0:
            x1 = h0(a[g1 & 7], (x3 < 7));
            break;
        default:
            x0 = (1 * (x2 < a[g1 & 7]));
        }
    } else {
        g0 = (a[g1 & 7] + g0 + 4 ^ x2);
        a[a[x0 & 7] & 7] = g0 ^ 0;
        x1 = x3;
    }
    g2 = (g1 == a[x2 & 7]) / (1 + ((0 & g0) & 3));
    if (a[g0 & 7] & 4 != 3) {
        x1 = h1(x2 ^ 2, 1);
        x0 = (9 - 4 | a[x1 & 7] ^ g2);
    }
    for (i0 = 0; i0 < 3; i0++) {
        if (g1 ^ x2 < 3) {
            g2 = (g2 < a[x1 & 7]);
            if (x2 == 1) break;
            if (x1 == 2) break;
        } else {
            x0 = h1(g1 - 2, x3 - x0);
            print_int(a[x3 & 7] | x0);
        }
    }
    if ((a[x0 & 7] < g2) > 5) {
        g2 = a[g1 & 7] | g2 / (1 + ((a[g2 & 7]) & 3));
        print_int(0 / (1 + ((5) & 3)));
        x1 = a[x1 & 7] % (1 + ((2) & 3));
    } else {
        x2 = (x1 | x2 < g0 & 0);
    }
    if (a[g0 & 7] / (1 + ((a[x0 & 7]) & 3)) == 8) {
        if (x2 < 4) {
            if ((a[x2 & 7] == 0) == 2) {
                g1 = g1;
            } else {
                print_int(a[x2 & 7] % (1 + ((x1) & 3)));
            }
        } else {
            a[g1 & 7] = x1 | 8;
        }
    } else {
        g2 = (a[x0 & 7] | a[x1 & 7] == x1 + x3);
    }
    g0 = (g1 * a[g0 & 7] & a[g0 & 7]);
    if (1 / (1 + ((x0) & 3)) > 6) {
        g1 = a[x1 & 7];
        g0 = 2 & x0 / (1 + ((x0 - 6) & 3));
        i0 = 0;
        while (i0 < 3) {
            a[a[x3 & 7] & 7] = g1;
            i0++;
        }
        x3 = (7 | x0 - x1 + g1);
    }
    if (x2 & 8 != 9) {
        g2 = (x3 & x0 ^ a[x1 & 7] ^ 9);
        a[g1 & 7] = a[g2 & 7] | a[g2 & 7];
    }
    x0++;
    x2 = 2 % (1 + ((g0) & 3)) % (1 + ((x3) & 3));
    g2 = x1;
    a[x3 & 7] = 2 - x3;
    i0 = 0;
    do {
        switch ((g2 == x3) & 3) {
        case 0:
            g2 = g0;
            g2 = x0;
        case 1:
            g0 = (8 * a[x2 & 7]);
        case 2:
            bump(g0 - x2);
            break;
        default:
            g0 = a[g1 & 7];
        }
        i0++;
    } while (i0 < 1);
    g1 = (x0 | a[x3 & 7] - 2);
    a[x1 & 7] = x2 * a[g1 & 7];
    x2 = x2 ^ a[g0 & 7] / (1 + ((8 * 9) & 3));
    g0 = (7 + 5 + 1 + g2);
    switch (x2 & 3) {
    case 0:
        g0 = a[x1 & 7];
        x3 = a[x0 & 7];
        break;
    case 1:
        print_int(g2 & a[x1 & 7]);
        break;
    case 2:
        x1 = (a[g1 & 7] / (1 + ((g2) & 3)) - a[g2 & 7]);
        break;
    default:
        a[5 & 7] = x1 & x2;
    }
    bump(2);
    x0 = ((g0 < a[x1 & 7]) ^ (0 < 4));
    switch (x2 * g1 & 3) {
    case 0:
        print_int((a[g1 & 7] == a[x3 & 7]));
        x1 = h0(a[x3 & 7] - g0, 2 | a[x1 & 7]);
        break;
    case 1:
        print_int(a[g2 & 7] / (1 + ((x3) & 3)));
        break;
    default:
        g2 = x2 - 1 / (1 + ((g2) & 3));
    }
    x3 = (a[x3 & 7] * g2);
    x3 = ((a[x2 & 7] < a[g0 & 7]) | a[g1 & 7] ^ 0);
    switch (1 & 3) {
    case 0:
        for (i0 = 0; i0 < 0; i0++) {
            g0 = (g1 | g1 & x2);
        }
        x1 = (g1 / (1 + ((x3) & 3)) ^ 8);
        break;
    case 1:
        g2 = 3;
        break;
    case 2:
        bump(x2 % (1 + ((g1) & 3)));
    default:
        bump(0);
    }
    i0 = 0;
    do {
        x1++;
        g1 = a[x3 & 7] ^ a[g1 & 7] / (1 + ((x1 * 2) & 3));
        if (g1 == 1) break;
        i0++;
    } while (i0 < 0);
    i0 = 0;
    while (i0 < 2) {
        x1 = a[g1 & 7];
        print_int(g0);
        i0++;
    }
    for (i0 = 0; i0 < 0; i0++) {
        bump(x0 / (1 + ((g1) & 3)));
        x2 = (g0 + 7 ^ a[x0 & 7]);
        if (x3 == 3) break;
        if ((a[x3 & 7] < x0) == 3) break;
    }
    x3 = 9;
    a[a[g1 & 7] & 7] = 0 - x0;
    if (g2 / (1 + ((a[x3 & 7]) & 3)) != 7)
        g0 = (8 ^ x3 & g0 - a[x2 & 7]);
    x0--;
    i0 = 0;
    do {
        g2 = a[x1 & 7];
        x2--;
        if (a[g1 & 7] == 2) break;
        print_int(2 * 7);
        x2 = (g0 | a[x0 & 7] & (1 == 8));
        i0++;
    } while (i0 < 2);
    print_int(a[x3 & 7]);
    if (g2 ^ g2 < 0) {
        g2 = (9 & a[x3 & 7] - g1 & x0);
        g2 = (a[x1 & 7] ^ g1 ^ a[g2 & 7] ^ 8);
        g2 = x1;
    } else {
        g2 = (4 % (1 + ((x1) & 3)) == 4 + a[x0 & 7]);
    }
    a[0 & 7] = x2;
    i0 = 0;
    do {
        a[g1 & 7] = x1;
        i0++;
    } while (i0 < 0);
    g0 = (a[g1 & 7] < a[x3 & 7]);
    g2 = (a[g1 & 7] | g1 ^ 0);
    x1 = h1((a[x2 & 7] == g1), 5);
    for (i0 = 0; i0 < 2; i0++) {
        x0 = h1(g0, a[x3 & 7] / (1 + ((a[x3 & 7]) & 3)));
        a[a[g1 & 7] & 7] = a[g2 & 7];
    }
    x3 = x0;
    x1 = (a[g1 & 7] + x1 + 4 / (1 + ((5) & 3)));
    g0 = x2;
    if (x0 != 6) {
        x0 = x0;
        g1 = a[g2 & 7];
        x1--;
        a[a[g0 & 7] & 7] = (x0 < 0);
        a[x3 & 7] = g2;
        g1 = g2;
    }
    if (6 ^ 7 > 2) {
        for (i0 = 0; i0 < 0; i0++) {
            x2 = ((x0 < a[g0 & 7]) < 4 - g2);
        }
        x3--;
        x3 = g2;
    } else {
        x2 = 7 / (1 + ((g0) & 3)) / (1 + ((g2 + 5) & 3));
    }
    switch (5 * x3 & 3) {
    case 0:
        a[g1 & 7] = a[g1 & 7];
        a[g0 & 7] = a[x1 & 7];
        break;
    default:
        bump(a[x1 & 7] + x3);
    }
    x1 = (a[g2 & 7] < a[g2 & 7]) / (1 + ((x0 * 3) & 3));
    x1 = h1(x3 + 8, 5 / (1 + ((5) & 3)));
    g0 = (g2 - 6 % (1 + ((a[x2 & 7]) & 3)));
    a[a[x1 & 7] & 7] = g1 * 3;
    i0 = 0;
    while (i0 < 0) {
        x3++;
        if (g2 == 2) break;
        g0 = ((4 < 7) - a[g1 & 7] & a[x1 & 7]);
        if ((x3 < g1) == 1) break;
        i0++;
    }
    g0 = 5;
    for (i0 = 0; i0 < 0; i0++) {
        x3 = (a[x2 & 7] - 7 / (1 + ((x3) & 3)));
        if (g1 == 2) continue;
        x0--;
        x0 = x1;
    }
    if (8 / (1 + ((x3) & 3)) > 6)
        g2 = a[x0 & 7];
    switch (x2 & 3) {
    case 0:
        g0 = (x0 * x0 - 8 + 8);
        x0 = g1 / (1 + ((g2) & 3));
        x1 = (x3 % (1 + ((a[x3 & 7]) & 3)) < (a[g1 & 7] < a[g1 & 7]));
    default:
        x2 = 1;
    }
    x2--;
    if (a[x2 & 7] > 8) {
        g1 = a[x1 & 7];
        x3 = (a[x3 & 7] & (x2 < a[x2 & 7]));
        switch (9 - 3 & 3) {
        case 0:
            print_int(7);
            break;
        case 1:
            g0 = x3;
            break;
        case 2:
            a[8 & 7] = x0 & x1;
        default:
            bump(8);
        }
    }
    x3 = (a[x2 & 7] & (a[x1 & 7] == 3));
    x0 = a[x2 & 7];
    i0 = 0;
    do {
        x2 = a[g2 & 7];
        x0++;
        print_int(5 - 2);
        x3++;
        i0++;
    } while (i0 < 2);
    switch ((a[x0 & 7] < 0) & 3) {
    case 0:
        g0 = a[g2 & 7];
        break;
    case 1:
        a[a[x3 & 7] & 7] = x2 / (1 + ((a[x0 & 7]) & 3));
    case 2:
        bump(a[g2 & 7]);
        break;
    default:
        print_int(0 / (1 + ((a[g1 & 7]) & 3)));
    }
    g2 = (7 - 2 < (x3 == a[g1 & 7]));
    for (i0 = 0; i0 < 2; i0++) {
        if (6 == 1) continue;
        x1 = (x2 * a[g1 & 7] - 6);
    }
    if (a[g2 & 7] ^ 9 != 9) {
        if ((9 < a[x0 & 7]) == 1) {
            a[a[x2 & 7] & 7] = 6;
            g2 = 3;
        }
    }
    bump(a[g2 & 7] + 7);
    for (i0 = 0; i0 < 0; i0++) {
        g2 = a[g0 & 7];
        g2 = a[x3 & 7] % (1 + ((0) & 3)) / (1 + ((x1 % (1 + ((9) & 3))) & 3));
    }
    x1 = ((a[x0 & 7] < g1) & g1 - a[x3 & 7]);
    i0 = 0;
    do {
        a[a[x3 & 7] & 7] = a[g0 & 7] % (1 + ((9) & 3));
        if (g1 + a[x0 & 7] == 3) break;
        print_int(a[g0 & 7] + a[g0 & 7]);
        bump(a[x0 & 7] % (1 + ((a[g1 & 7]) & 3)));
        x0 = g1 - a[g0 & 7] % (1 + ((a[x2 & 7] * x1) & 3));
        i0++;
    } while (i0 < 0);
    for (i0 = 0; i0 < 2; i0++) {
        if (a[x0 & 7] - x1 == 1) break;
        if (a[x1 & 7] | 2 > 5) {
            if (x1 == 1) break;
            x2 = h0(g2, (g0 < 6));
        }
    }
    for (i0 = 0; i0 < 3; i0++) {
        i1 = 0;
        while (i1 < 0) {
            a[1 & 7] = x3 & x0;
            i1++;
        }
        i1 = 0;
        while (i1 < 0) {
            g1 = (x1 | 3 * x1 / (1 + ((7) & 3)));
            i1++;
        }
    }
    for (i0 = 0; i0 < 0; i0++) {
        if (g1 == 3) {
            x1 = (x2 == g0);
            g1 = 7;
        }
    }
    bump(g2);
    bump(6);
    x2 = (2 % (1 + ((x0) & 3)) + a[x0 & 7] % (1 + ((4) & 3)));
    i0 = 0;
    do {
        g2 = 2;
        print_int((2 < g2));
        g0 = (x1 & x1 < 5 & a[x2 & 7]);
        print_int((g1 == g1));
        if (2 / (1 + ((5) & 3)) == 1) break;
        i0++;
    } while (i0 < 0);
    x3 = ((x2 == x1) - 0 - x3);
    x0 = ((x0 < x0) + 0 ^ g2);
    switch (0 / (1 + ((0) & 3)) & 3) {
    case 0:
        x3 = (a[g0 & 7] ^ g2 ^ x0);
        print_int(g2 / (1 + ((g2) & 3)));
        break;
    default:
        x0 = (a[g0 & 7] | a[g1 & 7] % (1 + ((a[g2 & 7]) & 3)));
    }
    if (a[g1 & 7] / (1 + ((9) & 3)) > 4) {
        x0 = x1;
        g1 = g2;
        g0 = (a[x1 & 7] & a[g2 & 7] - (a[g1 & 7] < 9));
    }
    x0 = (2 - x3 & g0);
    return (x0 + x1) & 255;
}
