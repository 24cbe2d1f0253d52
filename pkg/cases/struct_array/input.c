struct pt {
    int x;
    int y;
};

struct pt ps[3];

int main(void)
{
    int i, s;
    for (i = 0; i < 3; i++) {
        ps[i].x = i;
        ps[i].y = i * i;
    }
    s = ps[2].x + ps[2].y;
    return s;
}
