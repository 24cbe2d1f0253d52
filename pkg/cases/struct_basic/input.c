struct pt {
    int x;
    int y;
};

int main(void)
{
    struct pt p;
    p.x = 3;
    p.y = 4;
    return p.x * p.y;
}
